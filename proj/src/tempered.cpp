#include "bfh/tempered.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfh {

namespace {

BipolarValue base_edge_value(const TemperingWitness& w, std::size_t j) {
    const auto& members = w.base.edge(j).members;
    if (members.empty())
        throw std::domain_error("base edge '" + w.base.edge(j).name + "' is empty");
    double min_p = 1.0;
    double max_n = -1.0;
    for (auto i : members) {
        const auto& label = w.base.vertices()[i];
        if (!w.weights.contains(label))
            throw std::invalid_argument("weights do not cover vertex '" + label + "'");
        const auto& a = w.weights.value(label);
        min_p = std::min(min_p, a.p);
        max_n = std::max(max_n, a.n);
    }
    return BipolarValue(min_p, max_n);
}

}  // namespace

BipolarValue tempered_formula_value(const TemperingWitness& w, std::size_t base_edge,
                                    const VertexId& x) {
    auto on = base_edge_value(w, base_edge);
    const auto& vs = w.base.vertices();
    auto it = std::find(vs.begin(), vs.end(), x);
    if (it != vs.end()) {
        auto idx = static_cast<std::size_t>(it - vs.begin());
        const auto& members = w.base.edge(base_edge).members;
        if (std::binary_search(members.begin(), members.end(), idx)) return on;
    }
    return BipolarValue(0.0, -1.0);
}

BFHypergraph temper(const TemperingWitness& w) {
    const auto& vs = w.base.vertices();
    std::vector<std::string> names;
    std::vector<std::vector<BipolarValue>> rows(vs.size(),
                                                std::vector<BipolarValue>(w.base.edge_count()));
    for (std::size_t j = 0; j < w.base.edge_count(); ++j) {
        names.push_back(w.base.edge(j).name);
        auto value = base_edge_value(w, j);
        if (value.is_zero())
            throw std::domain_error("base edge '" + w.base.edge(j).name +
                                    "' tempers to the trivial edge (0,0)");
        for (auto i : w.base.edge(j).members) rows[i][j] = value;
    }
    return BFHypergraph::from_incidence(vs, std::move(names), rows);
}

std::optional<TemperingWitness> is_tempered(const BFHypergraph& h) {
    if (!h.is_elementary() || !h.is_support_simple() || !h.is_simply_ordered())
        return std::nullopt;

    // Weight each vertex with the extremal memberships it attains over the
    // edges containing it; the base is the support family. On any hypergraph
    // actually produced by tempering this reproduces the edge values.
    const auto& vs = h.vertices();
    std::vector<BipolarValue> weights(vs.size());
    std::vector<bool> seen(vs.size(), false);
    for (std::size_t j = 0; j < h.edge_count(); ++j) {
        auto supp = h.support_indices(j);
        auto value = h.cell(*supp.begin(), j);
        for (auto i : supp) {
            if (!seen[i]) {
                weights[i] = value;
                seen[i] = true;
            } else {
                weights[i] = BipolarValue(std::max(weights[i].p, value.p),
                                          std::min(weights[i].n, value.n));
            }
        }
    }

    std::vector<std::pair<std::string, std::vector<VertexId>>> base_edges;
    for (std::size_t j = 0; j < h.edge_count(); ++j) {
        auto s = h.support(j);
        base_edges.emplace_back(h.edge(j).name, std::vector<VertexId>(s.begin(), s.end()));
    }
    TemperingWitness w{CrispHypergraph(vs, std::move(base_edges)),
                       BipolarFuzzySet(vs, weights)};

    BFHypergraph rebuilt = temper(w);
    if (!(rebuilt == h))
        throw std::logic_error(
            "tempering predicates hold but no weighting reproduces the edge "
            "memberships; the structure is not expressible as a tempered hypergraph");
    return w;
}

BFHypergraph gen_unbounded_simple(std::size_t n_edges) {
    if (n_edges == 0) throw std::out_of_range("edge count must be at least 1");
    std::vector<VertexId> vertices{"x", "y"};
    std::vector<std::string> names;
    std::vector<std::vector<BipolarValue>> rows(2);
    for (std::size_t i = 1; i <= n_edges; ++i) {
        names.push_back("E" + std::to_string(i));
        double p = 1.0 / static_cast<double>(i + 1);
        double n = -static_cast<double>(i) / static_cast<double>(i + 1);
        rows[0].emplace_back(p, n);
        rows[1].emplace_back(p, n);
    }
    return BFHypergraph::from_incidence(vertices, std::move(names), rows);
}

BFHypergraph gen_elementary_simple_full(std::size_t n, std::size_t max_n) {
    if (n < 1 || n > max_n)
        throw std::domain_error("subset family generator supports 1.." +
                                std::to_string(max_n) + " vertices, got " +
                                std::to_string(n));
    std::vector<VertexId> vertices;
    for (std::size_t i = 1; i <= n; ++i) vertices.push_back("x" + std::to_string(i));
    std::size_t count = (std::size_t{1} << n) - 1;
    std::vector<std::string> names;
    std::vector<std::vector<BipolarValue>> rows(n, std::vector<BipolarValue>(count));
    for (std::size_t mask = 1; mask <= count; ++mask) {
        names.push_back("E" + std::to_string(mask));
        std::size_t size = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) ++size;
        BipolarValue v(1.0 / static_cast<double>(size),
                       -1.0 + 1.0 / static_cast<double>(size));
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) rows[i][mask - 1] = v;
    }
    return BFHypergraph::from_incidence(vertices, std::move(names), rows);
}

}  // namespace bfh
