#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bfh/bipolar.hpp"
#include "bfh/crisp.hpp"

namespace bfh {

/// One threshold pair of a fundamental sequence: a positive level s paired
/// with a negative level r. Entries of a fundamental sequence have s > 0;
/// r is 0 only for structures without negative memberships.
struct LevelPair {
    double s = 0.0;
    double r = 0.0;
    bool operator==(const LevelPair& o) const { return s == o.s && r == o.r; }
};

/// The descending threshold pairs at which the level hypergraph changes,
/// together with the level hypergraphs themselves (the core set). Traversal
/// order is from the tightest level downward: positive components strictly
/// decrease, core hypergraphs grow.
struct FundamentalSequence {
    std::vector<LevelPair> levels;
    std::vector<CrispHypergraph> cores;

    std::size_t size() const { return levels.size(); }
};

/// Edge cohesion: the maximum positive membership among positively
/// supported vertices and the maximum negative membership among negatively
/// supported ones. A side with no supported vertex contributes 0.
struct Strength {
    double p = 0.0;
    double n = 0.0;
    bool operator==(const Strength& o) const { return p == o.p && n == o.n; }
};

enum class StrengthOrdering { less, equal, greater, incomparable };

/// Componentwise partial order: greater when both components are >= with at
/// least one strict.
StrengthOrdering strength_order(const Strength& a, const Strength& b);

/// Total ranking order for reports: by p, then n, then name; true when a
/// ranks strictly ahead of b.
bool strength_ranks_before(const Strength& a, const std::string& name_a,
                           const Strength& b, const std::string& name_b);

struct BFEdge {
    std::string name;
    std::vector<BipolarValue> cells;  // aligned with the vertex list
};

/// A bipolar fuzzy hypergraph: an ordered vertex list and an ordered family
/// of named bipolar fuzzy edges over it. Every edge is nontrivial and the
/// edge supports cover the vertex set; both are enforced at construction.
class BFHypergraph {
public:
    static BFHypergraph from_incidence(std::vector<VertexId> vertices,
                                       std::vector<std::string> edge_names,
                                       const std::vector<std::vector<BipolarValue>>& rows);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<BFEdge>& edges() const { return edges_; }
    const BFEdge& edge(std::size_t j) const { return edges_.at(j); }
    std::size_t edge_index(const std::string& name) const;

    const BipolarValue& cell(std::size_t vertex_index, std::size_t edge_index) const;
    BipolarFuzzySet edge_set(std::size_t j) const;
    std::set<std::size_t> support_indices(std::size_t j) const;
    VertexSet support(std::size_t j) const;

    /// Crisp hypergraph of the edge supports.
    CrispHypergraph support_hypergraph() const;

    bool is_elementary() const;
    bool is_simple() const;
    bool is_support_simple() const;
    bool is_strongly_support_simple() const;

    /// (max p, min n) over all cells of the incidence matrix.
    BipolarValue height() const;

    /// Members of edge j at thresholds (s, r) under OR semantics:
    /// p >= s or n <= r.
    std::set<std::size_t> or_cut(std::size_t j, double s, double r) const;

    /// The (s,r)-level hypergraph: per-edge OR cuts, empty cuts dropped,
    /// duplicate cut sets removed, vertex set = union of the cuts.
    CrispHypergraph level_hypergraph(double s, double r) const;

    /// AND-semantics cut used for partitions: per-edge sets
    /// {x | p >= alpha and n <= beta} over the full vertex set, plus one
    /// remainder edge collecting the vertices in no class cut (omitted when
    /// empty). Empty class cuts are dropped.
    CrispHypergraph partition_cut(double alpha, double beta) const;

    FundamentalSequence fundamental_sequence() const;

    /// True when every supported cell's membership pair is one of the
    /// recorded fundamental level pairs.
    bool is_sectionally_elementary() const;

    bool is_ordered() const;
    bool is_simply_ordered() const;

    /// Transpose of the incidence matrix; dual vertices are named after the
    /// edges and dual edges after the vertices.
    BFHypergraph dual() const;

    Strength strength(const std::string& edge_name) const;
    Strength strength(std::size_t j) const;

    /// True when every edge support has exactly two vertices.
    bool as_bipolar_fuzzy_graph() const;

    bool operator==(const BFHypergraph& o) const;

private:
    BFHypergraph() = default;

    std::vector<VertexId> vertices_;
    std::vector<BFEdge> edges_;
};

namespace detail {
/// Shared AND-cut construction over a raw class matrix; used by both the
/// hypergraph operation and the partition pipeline, which must handle
/// reduced matrices that are no longer valid hypergraphs.
CrispHypergraph and_cut_matrix(const std::vector<VertexId>& vertices,
                               const std::vector<std::pair<std::string, std::vector<BipolarValue>>>& classes,
                               double alpha, double beta);

/// Per-edge positive cut family at level s with empty cuts dropped and
/// duplicates removed; the banding notion behind fundamental sequences.
CrispHypergraph positive_level_hypergraph(const std::vector<VertexId>& vertices,
                                          const std::vector<BFEdge>& edges, double s);
}  // namespace detail

}  // namespace bfh
