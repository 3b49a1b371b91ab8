#pragma once

// Test-only helpers: fixture loading, random instance generators on the 0.1
// membership grid, targeted mutations, and independent brute-force oracles.
// Everything here stays independent of the implementation paths it checks.

#include <optional>
#include <random>
#include <string>

#include "bfh/format.hpp"
#include "bfh/tempered.hpp"

namespace bfh_test {

std::string read_file(const std::string& relative_path);
bfh::MatrixDocument load_document(const std::string& relative_path);
bfh::BFHypergraph load_hypergraph(const std::string& relative_path);

using Family = std::set<bfh::VertexSet>;
Family family_of(const bfh::CrispHypergraph& h);

// 0.1-grid draws; grid_p may return 0, grid_n may return 0.
double grid_p(std::mt19937& rng);
double grid_n(std::mt19937& rng);

/// Random valid hypergraph: |V| <= max_vertices, 1..max_edges edges,
/// memberships on the 0.1 grid, nontriviality and covering patched in.
bfh::BFHypergraph random_hypergraph(std::mt19937& rng, std::size_t max_vertices = 6,
                                    std::size_t max_edges = 5);

/// Random elementary hypergraph. When a support is reused, the second
/// edge's constant value is drawn dominance-comparable to the first, the
/// shape the simplicity propositions quantify over.
bfh::BFHypergraph random_elementary(std::mt19937& rng, std::size_t max_vertices = 6,
                                    std::size_t max_edges = 5,
                                    bool allow_duplicate_supports = true);

/// Random hypergraph whose supported cells all come from one dominance
/// chain (p strictly increasing, n strictly decreasing along it), so any
/// two cell values are comparable.
bfh::BFHypergraph random_chain_valued(std::mt19937& rng, std::size_t max_vertices = 6,
                                      std::size_t max_edges = 5);

/// Random witness: distinct covering base edges, grid weights, every base
/// edge tempering to a nontrivial value.
bfh::TemperingWitness random_witness(std::mt19937& rng, std::size_t max_vertices = 6,
                                     std::size_t max_edges = 5);

// Targeted mutations for the tempering characterization's reverse
// direction. Each returns nothing when the input has no room for it.
std::optional<bfh::BFHypergraph> mutate_break_elementary(const bfh::BFHypergraph& h,
                                                         std::mt19937& rng);
std::optional<bfh::BFHypergraph> mutate_duplicate_support(const bfh::BFHypergraph& h,
                                                          std::mt19937& rng);
std::optional<bfh::BFHypergraph> mutate_inject_inner_edge(const bfh::BFHypergraph& h,
                                                          std::mt19937& rng);

/// Quadratic containment scan, the definitional check for crisp simplicity.
bool crisp_simple_oracle(const bfh::CrispHypergraph& h);

/// Quadratic dominance scan for bipolar simplicity.
bool bf_simple_oracle(const bfh::BFHypergraph& h);

/// Independent fundamental-sequence oracle: enumerate every distinct
/// supported membership pair, compute the level family at each from the
/// cells directly, and deduplicate consecutive equal families.
std::vector<Family> fseq_family_oracle(const bfh::BFHypergraph& h);

}  // namespace bfh_test
