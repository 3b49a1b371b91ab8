#include "bfh/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bfh {

StrengthOrdering strength_order(const Strength& a, const Strength& b) {
    if (a.p == b.p && a.n == b.n) return StrengthOrdering::equal;
    if (a.p >= b.p && a.n >= b.n) return StrengthOrdering::greater;
    if (a.p <= b.p && a.n <= b.n) return StrengthOrdering::less;
    return StrengthOrdering::incomparable;
}

bool strength_ranks_before(const Strength& a, const std::string& name_a,
                           const Strength& b, const std::string& name_b) {
    if (a.p != b.p) return a.p > b.p;
    if (a.n != b.n) return a.n > b.n;
    return name_a < name_b;
}

BFHypergraph BFHypergraph::from_incidence(
    std::vector<VertexId> vertices, std::vector<std::string> edge_names,
    const std::vector<std::vector<BipolarValue>>& rows) {
    if (rows.size() != vertices.size())
        throw std::invalid_argument("incidence matrix has " + std::to_string(rows.size()) +
                                    " rows for " + std::to_string(vertices.size()) +
                                    " vertices");
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != edge_names.size())
            throw std::invalid_argument("row '" + vertices[i] + "' has " +
                                        std::to_string(rows[i].size()) + " cells for " +
                                        std::to_string(edge_names.size()) + " edges");
    {
        std::set<VertexId> seen;
        for (const auto& v : vertices)
            if (!seen.insert(v).second)
                throw std::invalid_argument("duplicate vertex label '" + v + "'");
        std::set<std::string> eseen;
        for (const auto& e : edge_names)
            if (!eseen.insert(e).second)
                throw std::invalid_argument("duplicate edge label '" + e + "'");
    }

    BFHypergraph h;
    h.vertices_ = std::move(vertices);
    for (std::size_t j = 0; j < edge_names.size(); ++j) {
        BFEdge e;
        e.name = edge_names[j];
        e.cells.reserve(h.vertices_.size());
        for (std::size_t i = 0; i < h.vertices_.size(); ++i) e.cells.push_back(rows[i][j]);
        h.edges_.push_back(std::move(e));
    }

    for (std::size_t j = 0; j < h.edges_.size(); ++j)
        if (h.support_indices(j).empty())
            throw std::domain_error("edge '" + h.edges_[j].name +
                                    "' is trivial: every membership is (0,0)");
    for (std::size_t i = 0; i < h.vertices_.size(); ++i) {
        bool covered = false;
        for (const auto& e : h.edges_)
            if (!e.cells[i].is_zero()) {
                covered = true;
                break;
            }
        if (!covered)
            throw std::domain_error("vertex '" + h.vertices_[i] +
                                    "' is in no edge support; covering fails");
    }
    return h;
}

std::size_t BFHypergraph::edge_index(const std::string& name) const {
    for (std::size_t j = 0; j < edges_.size(); ++j)
        if (edges_[j].name == name) return j;
    throw std::invalid_argument("unknown edge '" + name + "'");
}

const BipolarValue& BFHypergraph::cell(std::size_t vertex_index,
                                       std::size_t edge_index) const {
    return edges_.at(edge_index).cells.at(vertex_index);
}

BipolarFuzzySet BFHypergraph::edge_set(std::size_t j) const {
    return BipolarFuzzySet(vertices_, edges_.at(j).cells);
}

std::set<std::size_t> BFHypergraph::support_indices(std::size_t j) const {
    std::set<std::size_t> out;
    const auto& e = edges_.at(j);
    for (std::size_t i = 0; i < e.cells.size(); ++i)
        if (!e.cells[i].is_zero()) out.insert(i);
    return out;
}

VertexSet BFHypergraph::support(std::size_t j) const {
    VertexSet out;
    for (auto i : support_indices(j)) out.insert(vertices_[i]);
    return out;
}

CrispHypergraph BFHypergraph::support_hypergraph() const {
    std::vector<std::pair<std::string, std::vector<VertexId>>> edges;
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        auto s = support(j);
        edges.emplace_back(edges_[j].name, std::vector<VertexId>(s.begin(), s.end()));
    }
    return CrispHypergraph(vertices_, std::move(edges));
}

bool BFHypergraph::is_elementary() const {
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        auto supp = support_indices(j);
        const BipolarValue* first = nullptr;
        for (auto i : supp) {
            if (!first) {
                first = &edges_[j].cells[i];
            } else if (edges_[j].cells[i] != *first) {
                return false;
            }
        }
    }
    return true;
}

namespace {

bool edge_leq(const BFEdge& a, const BFEdge& b) {
    for (std::size_t i = 0; i < a.cells.size(); ++i)
        if (!value_leq(a.cells[i], b.cells[i])) return false;
    return true;
}

}  // namespace

bool BFHypergraph::is_simple() const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (std::size_t j = 0; j < edges_.size(); ++j)
            if (i != j && edge_leq(edges_[i], edges_[j])) return false;
    return true;
}

bool BFHypergraph::is_support_simple() const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (std::size_t j = 0; j < edges_.size(); ++j) {
            if (i == j) continue;
            if (support_indices(i) != support_indices(j)) continue;
            if (edge_leq(edges_[i], edges_[j])) return false;
        }
    return true;
}

bool BFHypergraph::is_strongly_support_simple() const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (std::size_t j = i + 1; j < edges_.size(); ++j)
            if (support_indices(i) == support_indices(j)) return false;
    return true;
}

BipolarValue BFHypergraph::height() const {
    double max_p = 0.0;
    double min_n = 0.0;
    for (const auto& e : edges_)
        for (const auto& c : e.cells) {
            max_p = std::max(max_p, c.p);
            min_n = std::min(min_n, c.n);
        }
    return BipolarValue(max_p, min_n);
}

std::set<std::size_t> BFHypergraph::or_cut(std::size_t j, double s, double r) const {
    std::set<std::size_t> out;
    const auto& e = edges_.at(j);
    for (std::size_t i = 0; i < e.cells.size(); ++i)
        if (e.cells[i].p >= s || e.cells[i].n <= r) out.insert(i);
    return out;
}

namespace {

/// Builds a crisp hypergraph from per-edge member-index sets: empty sets
/// dropped, duplicate sets removed keeping the first generating edge's
/// name, vertex set = union of the members in original order.
CrispHypergraph cut_family_hypergraph(const std::vector<VertexId>& vertices,
                                      const std::vector<std::string>& names,
                                      const std::vector<std::set<std::size_t>>& cuts) {
    std::vector<std::set<std::size_t>> kept;
    std::vector<std::string> kept_names;
    for (std::size_t j = 0; j < cuts.size(); ++j) {
        if (cuts[j].empty()) continue;
        if (std::find(kept.begin(), kept.end(), cuts[j]) != kept.end()) continue;
        kept.push_back(cuts[j]);
        kept_names.push_back(names[j]);
    }
    std::set<std::size_t> used;
    for (const auto& c : kept) used.insert(c.begin(), c.end());
    std::vector<VertexId> cut_vertices;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (used.count(i)) cut_vertices.push_back(vertices[i]);
    std::vector<std::pair<std::string, std::vector<VertexId>>> edges;
    for (std::size_t k = 0; k < kept.size(); ++k) {
        std::vector<VertexId> members;
        for (auto i : kept[k]) members.push_back(vertices[i]);
        edges.emplace_back(kept_names[k], std::move(members));
    }
    return CrispHypergraph(std::move(cut_vertices), std::move(edges));
}

}  // namespace

CrispHypergraph BFHypergraph::level_hypergraph(double s, double r) const {
    std::vector<std::set<std::size_t>> cuts;
    std::vector<std::string> names;
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        cuts.push_back(or_cut(j, s, r));
        names.push_back(edges_[j].name);
    }
    return cut_family_hypergraph(vertices_, names, cuts);
}

namespace detail {

CrispHypergraph and_cut_matrix(
    const std::vector<VertexId>& vertices,
    const std::vector<std::pair<std::string, std::vector<BipolarValue>>>& classes,
    double alpha, double beta) {
    std::vector<std::pair<std::string, std::vector<VertexId>>> edges;
    std::vector<bool> covered(vertices.size(), false);
    for (const auto& [name, cells] : classes) {
        std::vector<VertexId> members;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (cells[i].p >= alpha && cells[i].n <= beta) {
                members.push_back(vertices[i]);
                covered[i] = true;
            }
        }
        if (!members.empty()) edges.emplace_back(name, std::move(members));
    }
    std::vector<VertexId> remainder;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!covered[i]) remainder.push_back(vertices[i]);
    if (!remainder.empty()) {
        std::string name;
        std::size_t k = classes.size() + 1;
        auto taken = [&](const std::string& candidate) {
            for (const auto& e : edges)
                if (e.first == candidate) return true;
            return false;
        };
        do {
            name = "E" + std::to_string(k++);
        } while (taken(name));
        edges.emplace_back(name, std::move(remainder));
    }
    return CrispHypergraph(vertices, std::move(edges));
}

CrispHypergraph positive_level_hypergraph(const std::vector<VertexId>& vertices,
                                          const std::vector<BFEdge>& edges, double s) {
    std::vector<std::set<std::size_t>> cuts;
    std::vector<std::string> names;
    for (const auto& e : edges) {
        std::set<std::size_t> cut;
        for (std::size_t i = 0; i < e.cells.size(); ++i)
            if (e.cells[i].p >= s) cut.insert(i);
        cuts.push_back(std::move(cut));
        names.push_back(e.name);
    }
    return cut_family_hypergraph(vertices, names, cuts);
}

}  // namespace detail

CrispHypergraph BFHypergraph::partition_cut(double alpha, double beta) const {
    std::vector<std::pair<std::string, std::vector<BipolarValue>>> classes;
    for (const auto& e : edges_) classes.emplace_back(e.name, e.cells);
    return detail::and_cut_matrix(vertices_, classes, alpha, beta);
}

FundamentalSequence BFHypergraph::fundamental_sequence() const {
    // Distinct positive values, walked from the largest down. The level
    // hypergraph of the walk is the positive cut family; the negative
    // component recorded with each level is the deepest negative membership
    // among the cells admitted exactly at that level.
    std::set<double> positive;
    for (const auto& e : edges_)
        for (const auto& c : e.cells)
            if (c.p > 0.0) positive.insert(c.p);

    FundamentalSequence fs;
    if (positive.empty()) return fs;

    std::set<VertexSet> previous;
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
        double s = *it;
        CrispHypergraph level = detail::positive_level_hypergraph(vertices_, edges_, s);
        auto family = level.edge_family();
        std::set<VertexSet> family_set(family.begin(), family.end());
        if (family_set == previous || family_set.empty()) continue;
        double r = 0.0;
        for (const auto& e : edges_)
            for (const auto& c : e.cells)
                if (c.p == s) r = std::min(r, c.n);
        fs.levels.push_back({s, r});
        fs.cores.push_back(std::move(level));
        previous = std::move(family_set);
    }

    for (std::size_t i = 0; i + 1 < fs.cores.size(); ++i) {
        if (!absorbs_strictly(fs.cores[i].edge_family(), fs.cores[i + 1].edge_family()))
            throw std::logic_error(
                "fundamental sequence: recorded families do not form a strict absorb "
                "chain between levels " +
                std::to_string(i + 1) + " and " + std::to_string(i + 2));
    }
    return fs;
}

bool BFHypergraph::is_sectionally_elementary() const {
    auto fs = fundamental_sequence();
    std::set<std::pair<double, double>> level_pairs;
    for (const auto& l : fs.levels) level_pairs.insert({l.s, l.r});
    for (const auto& e : edges_)
        for (const auto& c : e.cells) {
            if (c.is_zero()) continue;
            if (!level_pairs.count({c.p, c.n})) return false;
        }
    return true;
}

bool BFHypergraph::is_ordered() const {
    auto fs = fundamental_sequence();
    return bfh::is_ordered(fs.cores);
}

bool BFHypergraph::is_simply_ordered() const {
    auto fs = fundamental_sequence();
    return bfh::is_simply_ordered(fs.cores);
}

BFHypergraph BFHypergraph::dual() const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        bool nontrivial = false;
        for (const auto& e : edges_)
            if (!e.cells[i].is_zero()) {
                nontrivial = true;
                break;
            }
        if (!nontrivial)
            throw std::domain_error("vertex '" + vertices_[i] +
                                    "' has (0,0) in every edge; its dual edge would be "
                                    "trivial");
    }
    BFHypergraph d;
    for (const auto& e : edges_) d.vertices_.push_back(e.name);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        BFEdge row;
        row.name = vertices_[i];
        for (const auto& e : edges_) row.cells.push_back(e.cells[i]);
        d.edges_.push_back(std::move(row));
    }
    return d;
}

Strength BFHypergraph::strength(std::size_t j) const {
    const auto& e = edges_.at(j);
    Strength s;
    bool any_p = false, any_n = false;
    for (const auto& c : e.cells) {
        if (c.p > 0.0) {
            s.p = any_p ? std::max(s.p, c.p) : c.p;
            any_p = true;
        }
        if (c.n < 0.0) {
            s.n = any_n ? std::max(s.n, c.n) : c.n;
            any_n = true;
        }
    }
    return s;
}

Strength BFHypergraph::strength(const std::string& edge_name) const {
    return strength(edge_index(edge_name));
}

bool BFHypergraph::as_bipolar_fuzzy_graph() const {
    for (std::size_t j = 0; j < edges_.size(); ++j)
        if (support_indices(j).size() != 2) return false;
    return true;
}

bool BFHypergraph::operator==(const BFHypergraph& o) const {
    if (vertices_ != o.vertices_ || edges_.size() != o.edges_.size()) return false;
    for (std::size_t j = 0; j < edges_.size(); ++j)
        if (edges_[j].name != o.edges_[j].name || edges_[j].cells != o.edges_[j].cells)
            return false;
    return true;
}

}  // namespace bfh
