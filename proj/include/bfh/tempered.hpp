#pragma once

#include <optional>

#include "bfh/crisp.hpp"
#include "bfh/hypergraph.hpp"

namespace bfh {

/// A crisp base hypergraph together with a vertex weighting; tempering the
/// base by the weights yields a bipolar fuzzy hypergraph with one edge per
/// base edge.
struct TemperingWitness {
    CrispHypergraph base;
    BipolarFuzzySet weights;
};

/// Membership the tempering formula assigns to vertex x in the edge built
/// from base edge F: (min p over F, max n over F) on F and (0,-1) off F.
/// The off-support value is quoted by the formula but is not stored in the
/// constructed hypergraph; see temper().
BipolarValue tempered_formula_value(const TemperingWitness& w, std::size_t base_edge,
                                    const VertexId& x);

/// Builds A(x)H: one edge per base edge F carrying the constant pair
/// (min p over F, max n over F) on F. Off-support cells are stored neutral,
/// so the result is elementary with supports equal to the base edges; the
/// formula's off-support (0,-1) reading stays available through
/// tempered_formula_value(). Throws if a base edge is empty or collapses to
/// a trivial edge.
BFHypergraph temper(const TemperingWitness& w);

/// Returns a witness when H is elementary, support simple and simply
/// ordered. The witness weights each vertex with the extremal memberships
/// it attains across the edges containing it, and the base is the support
/// family; temper() of the witness is verified to reproduce H before it is
/// returned. A verification mismatch after the predicates pass is a
/// structural error and throws.
std::optional<TemperingWitness> is_tempered(const BFHypergraph& h);

/// Two-vertex family with N pairwise incomparable edges: edge i carries
/// (1/(i+1), -i/(i+1)) on both vertices. Simple for every N.
BFHypergraph gen_unbounded_simple(std::size_t n_edges);

/// One edge per nonempty subset W of an n-vertex set, carrying
/// (1/|W|, -1 + 1/|W|) on W. Elementary and simple with 2^n - 1 edges.
BFHypergraph gen_elementary_simple_full(std::size_t n, std::size_t max_n = 10);

}  // namespace bfh
