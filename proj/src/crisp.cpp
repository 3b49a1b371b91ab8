#include "bfh/crisp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bfh {

CrispHypergraph::CrispHypergraph(
    std::vector<VertexId> vertices,
    std::vector<std::pair<std::string, std::vector<VertexId>>> edges)
    : vertices_(std::move(vertices)) {
    std::set<VertexId> vertex_set;
    for (const auto& v : vertices_) {
        if (!vertex_set.insert(v).second)
            throw std::invalid_argument("duplicate vertex label '" + v + "'");
    }
    std::set<std::string> edge_names;
    for (auto& [name, members] : edges) {
        if (!edge_names.insert(name).second)
            throw std::invalid_argument("duplicate edge label '" + name + "'");
        if (members.empty())
            throw std::invalid_argument("edge '" + name + "' is empty");
        std::set<std::size_t> indices;
        for (const auto& m : members) {
            auto it = std::find(vertices_.begin(), vertices_.end(), m);
            if (it == vertices_.end())
                throw std::invalid_argument("edge '" + name + "' uses unknown vertex '" +
                                            m + "'");
            indices.insert(static_cast<std::size_t>(it - vertices_.begin()));
        }
        edges_.push_back({name, {indices.begin(), indices.end()}});
    }
}

VertexSet CrispHypergraph::edge_vertex_set(std::size_t j) const {
    VertexSet out;
    for (auto i : edges_.at(j).members) out.insert(vertices_[i]);
    return out;
}

SetFamily CrispHypergraph::edge_family() const {
    SetFamily out;
    out.reserve(edges_.size());
    for (std::size_t j = 0; j < edges_.size(); ++j) out.push_back(edge_vertex_set(j));
    return out;
}

bool CrispHypergraph::incident(std::size_t vertex_index, std::size_t edge_index) const {
    const auto& m = edges_.at(edge_index).members;
    return std::binary_search(m.begin(), m.end(), vertex_index);
}

bool CrispHypergraph::covers() const {
    std::vector<bool> hit(vertices_.size(), false);
    for (const auto& e : edges_)
        for (auto i : e.members) hit[i] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::size_t CrispHypergraph::rank() const {
    if (edges_.empty()) throw std::domain_error("rank undefined: hypergraph has no edges");
    std::size_t r = 0;
    for (const auto& e : edges_) r = std::max(r, e.members.size());
    return r;
}

std::size_t CrispHypergraph::anti_rank() const {
    if (edges_.empty())
        throw std::domain_error("anti-rank undefined: hypergraph has no edges");
    std::size_t r = edges_.front().members.size();
    for (const auto& e : edges_) r = std::min(r, e.members.size());
    return r;
}

bool CrispHypergraph::is_uniform() const { return rank() == anti_rank(); }

bool CrispHypergraph::is_k_uniform(std::size_t k) const {
    return is_uniform() && rank() == k;
}

bool CrispHypergraph::is_simple() const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        for (std::size_t j = 0; j < edges_.size(); ++j) {
            if (i == j) continue;
            const auto& a = edges_[i].members;
            const auto& b = edges_[j].members;
            if (std::includes(b.begin(), b.end(), a.begin(), a.end())) return false;
        }
    }
    return true;
}

CrispHypergraph CrispHypergraph::dual() const {
    std::vector<std::vector<VertexId>> dual_edges(vertices_.size());
    for (std::size_t j = 0; j < edges_.size(); ++j)
        for (auto i : edges_[j].members) dual_edges[i].push_back(edges_[j].name);
    std::vector<std::pair<std::string, std::vector<VertexId>>> named;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (dual_edges[i].empty())
            throw std::domain_error("vertex '" + vertices_[i] +
                                    "' lies in no edge; its dual edge would be empty");
        named.emplace_back(vertices_[i], dual_edges[i]);
    }
    std::vector<VertexId> dual_vertices;
    dual_vertices.reserve(edges_.size());
    for (const auto& e : edges_) dual_vertices.push_back(e.name);
    return CrispHypergraph(std::move(dual_vertices), std::move(named));
}

std::vector<std::vector<std::size_t>> CrispHypergraph::automorphisms(
    std::size_t max_vertices) const {
    if (vertices_.size() > max_vertices)
        throw std::domain_error("symmetry check is limited to " +
                                std::to_string(max_vertices) + " vertices, got " +
                                std::to_string(vertices_.size()));
    // Edge family as a sorted multiset of member-index sets.
    auto canonical = [this](const std::vector<std::size_t>& perm) {
        std::vector<std::vector<std::size_t>> fam;
        fam.reserve(edges_.size());
        for (const auto& e : edges_) {
            std::vector<std::size_t> mapped;
            mapped.reserve(e.members.size());
            for (auto i : e.members) mapped.push_back(perm[i]);
            std::sort(mapped.begin(), mapped.end());
            fam.push_back(std::move(mapped));
        }
        std::sort(fam.begin(), fam.end());
        return fam;
    };
    std::vector<std::size_t> identity(vertices_.size());
    std::iota(identity.begin(), identity.end(), 0);
    const auto base = canonical(identity);

    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> perm = identity;
    do {
        if (canonical(perm) == base) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool CrispHypergraph::is_vertex_symmetric(std::size_t max_vertices) const {
    if (vertices_.size() <= 1) return true;
    auto auts = automorphisms(max_vertices);
    // The orbit of vertex 0 under the full automorphism group must be V.
    std::set<std::size_t> orbit;
    for (const auto& perm : auts) orbit.insert(perm[0]);
    return orbit.size() == vertices_.size();
}

bool CrispHypergraph::is_edge_symmetric(std::size_t max_vertices) const {
    if (edges_.size() <= 1) return true;
    auto auts = automorphisms(max_vertices);
    auto mapped_members = [](const std::vector<std::size_t>& perm,
                             const std::vector<std::size_t>& members) {
        std::vector<std::size_t> m;
        m.reserve(members.size());
        for (auto i : members) m.push_back(perm[i]);
        std::sort(m.begin(), m.end());
        return m;
    };
    // Orbit of the first edge's member set; every edge set must lie in it.
    std::set<std::vector<std::size_t>> orbit;
    for (const auto& perm : auts) orbit.insert(mapped_members(perm, edges_[0].members));
    for (const auto& e : edges_)
        if (orbit.find(e.members) == orbit.end()) return false;
    return true;
}

bool CrispHypergraph::operator==(const CrispHypergraph& o) const {
    if (vertices_ != o.vertices_ || edges_.size() != o.edges_.size()) return false;
    for (std::size_t j = 0; j < edges_.size(); ++j)
        if (edges_[j].name != o.edges_[j].name || edges_[j].members != o.edges_[j].members)
            return false;
    return true;
}

bool absorbs(const SetFamily& x, const SetFamily& y) {
    for (const auto& a : x) {
        bool contained = false;
        for (const auto& b : y) {
            if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) return false;
    }
    return true;
}

bool absorbs_strictly(const SetFamily& x, const SetFamily& y) {
    std::set<VertexSet> xs(x.begin(), x.end());
    std::set<VertexSet> ys(y.begin(), y.end());
    return absorbs(x, y) && xs != ys;
}

namespace {

bool subhypergraph_of(const CrispHypergraph& a, const CrispHypergraph& b) {
    std::set<VertexId> vb(b.vertices().begin(), b.vertices().end());
    for (const auto& v : a.vertices())
        if (vb.find(v) == vb.end()) return false;
    auto fb = b.edge_family();
    std::set<VertexSet> fbs(fb.begin(), fb.end());
    for (const auto& e : a.edge_family())
        if (fbs.find(e) == fbs.end()) return false;
    return true;
}

}  // namespace

bool is_ordered(const std::vector<CrispHypergraph>& sequence) {
    for (std::size_t i = 0; i + 1 < sequence.size(); ++i)
        if (!subhypergraph_of(sequence[i], sequence[i + 1])) return false;
    return true;
}

bool is_simply_ordered(const std::vector<CrispHypergraph>& sequence) {
    if (!is_ordered(sequence)) return false;
    for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
        auto prev_family = sequence[i].edge_family();
        std::set<VertexSet> prev(prev_family.begin(), prev_family.end());
        std::set<VertexId> prev_vertices(sequence[i].vertices().begin(),
                                         sequence[i].vertices().end());
        for (const auto& e : sequence[i + 1].edge_family()) {
            if (prev.count(e)) continue;  // not new
            bool leaves = false;
            for (const auto& v : e)
                if (!prev_vertices.count(v)) {
                    leaves = true;
                    break;
                }
            if (!leaves) return false;
        }
    }
    return true;
}

}  // namespace bfh
