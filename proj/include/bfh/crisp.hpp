#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "bfh/bipolar.hpp"

namespace bfh {

/// An edge family member: a named nonempty subset of the vertex list,
/// stored as sorted indices into the owning hypergraph's vertex vector.
struct CrispEdge {
    std::string name;
    std::vector<std::size_t> members;  // sorted, unique
};

using VertexSet = std::set<VertexId>;
using SetFamily = std::vector<VertexSet>;

/// A classical hypergraph: ordered vertices plus an ordered list of named
/// nonempty vertex subsets. Repeated identical edges are representable.
/// The covering condition (union of edges = V) is computed on demand via
/// covers(); cut-produced hypergraphs are allowed to violate it.
class CrispHypergraph {
public:
    CrispHypergraph() = default;
    CrispHypergraph(std::vector<VertexId> vertices,
                    std::vector<std::pair<std::string, std::vector<VertexId>>> edges);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return vertices_.empty() && edges_.empty(); }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const CrispEdge& edge(std::size_t j) const { return edges_.at(j); }
    const std::vector<CrispEdge>& edges() const { return edges_; }

    VertexSet edge_vertex_set(std::size_t j) const;
    SetFamily edge_family() const;
    bool incident(std::size_t vertex_index, std::size_t edge_index) const;

    bool covers() const;

    std::size_t rank() const;
    std::size_t anti_rank() const;
    bool is_uniform() const;
    bool is_k_uniform(std::size_t k) const;

    /// No repeated edges and no edge contained in another.
    bool is_simple() const;

    /// Vertices become the edges of the dual and vice versa; the dual's
    /// incidence matrix is the transpose. Requires every vertex to lie in
    /// at least one edge.
    CrispHypergraph dual() const;

    bool is_vertex_symmetric(std::size_t max_vertices = 8) const;
    bool is_edge_symmetric(std::size_t max_vertices = 8) const;

    bool operator==(const CrispHypergraph& o) const;

private:
    std::vector<std::vector<std::size_t>> automorphisms(std::size_t max_vertices) const;

    std::vector<VertexId> vertices_;
    std::vector<CrispEdge> edges_;
};

/// Y absorbs X when every member of X is contained in some member of Y.
bool absorbs(const SetFamily& x, const SetFamily& y);

/// Absorption plus inequality of the two families (compared as sets of sets).
bool absorbs_strictly(const SetFamily& x, const SetFamily& y);

/// H1 c H2 c ... : vertex and edge containment at every step.
bool is_ordered(const std::vector<CrispHypergraph>& sequence);

/// Ordered, and every edge new at step i+1 has a vertex outside V_i.
bool is_simply_ordered(const std::vector<CrispHypergraph>& sequence);

}  // namespace bfh
