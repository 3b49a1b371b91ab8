#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bfh_test {

using namespace bfh;

std::string read_file(const std::string& relative_path) {
    std::ifstream in(std::string(BFH_SOURCE_DIR) + "/" + relative_path);
    if (!in) throw std::runtime_error("missing fixture " + relative_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

MatrixDocument load_document(const std::string& relative_path) {
    return parse_document(read_file(relative_path));
}

BFHypergraph load_hypergraph(const std::string& relative_path) {
    return load_document(relative_path).to_hypergraph();
}

Family family_of(const CrispHypergraph& h) {
    auto fam = h.edge_family();
    return Family(fam.begin(), fam.end());
}

double grid_p(std::mt19937& rng) {
    return std::uniform_int_distribution<int>(0, 10)(rng) / 10.0;
}

double grid_n(std::mt19937& rng) {
    return -std::uniform_int_distribution<int>(0, 10)(rng) / 10.0;
}

namespace {

std::vector<VertexId> make_vertices(std::mt19937& rng, std::size_t max_vertices) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
    std::vector<VertexId> vs;
    for (std::size_t i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
    return vs;
}

BipolarValue random_nonzero(std::mt19937& rng) {
    for (;;) {
        BipolarValue v(grid_p(rng), grid_n(rng));
        if (!v.is_zero()) return v;
    }
}

}  // namespace

BFHypergraph random_hypergraph(std::mt19937& rng, std::size_t max_vertices,
                               std::size_t max_edges) {
    auto vs = make_vertices(rng, max_vertices);
    std::size_t ne = std::uniform_int_distribution<std::size_t>(1, max_edges)(rng);
    std::vector<std::string> names;
    for (std::size_t j = 1; j <= ne; ++j) names.push_back("E" + std::to_string(j));
    std::vector<std::vector<BipolarValue>> rows(vs.size(),
                                                std::vector<BipolarValue>(ne));
    std::bernoulli_distribution occupied(0.5);
    for (auto& row : rows)
        for (auto& cell : row)
            if (occupied(rng)) cell = BipolarValue(grid_p(rng), grid_n(rng));
    // patch trivial edges and uncovered vertices
    for (std::size_t j = 0; j < ne; ++j) {
        bool nontrivial = false;
        for (const auto& row : rows) nontrivial |= !row[j].is_zero();
        if (!nontrivial) {
            auto i = std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng);
            rows[i][j] = random_nonzero(rng);
        }
    }
    for (auto& row : rows) {
        bool covered = false;
        for (const auto& cell : row) covered |= !cell.is_zero();
        if (!covered) {
            auto j = std::uniform_int_distribution<std::size_t>(0, ne - 1)(rng);
            row[j] = random_nonzero(rng);
        }
    }
    return BFHypergraph::from_incidence(vs, names, rows);
}

BFHypergraph random_elementary(std::mt19937& rng, std::size_t max_vertices,
                               std::size_t max_edges, bool allow_duplicate_supports) {
    auto vs = make_vertices(rng, max_vertices);
    std::size_t ne = std::uniform_int_distribution<std::size_t>(1, max_edges)(rng);
    std::vector<std::set<std::size_t>> supports;
    std::vector<BipolarValue> values;
    for (std::size_t j = 0; j < ne; ++j) {
        std::set<std::size_t> supp;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (std::bernoulli_distribution(0.5)(rng)) supp.insert(i);
        if (supp.empty())
            supp.insert(std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng));
        BipolarValue value = random_nonzero(rng);
        if (!allow_duplicate_supports) {
            while (std::find(supports.begin(), supports.end(), supp) != supports.end() &&
                   supp.size() < vs.size())
                supp.insert(std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng));
        } else {
            auto it = std::find(supports.begin(), supports.end(), supp);
            if (it != supports.end()) {
                // reuse: keep the pair comparable with the first occupant
                auto base = values[static_cast<std::size_t>(it - supports.begin())];
                double p = std::max(0.0, base.p - 0.1);
                double n = base.n / 2.0;
                value = BipolarValue(p, n);
                if (value.is_zero()) value = base;
            }
        }
        supports.push_back(supp);
        values.push_back(value);
    }
    // cover every vertex
    for (std::size_t i = 0; i < vs.size(); ++i) {
        bool covered = false;
        for (const auto& s : supports) covered |= s.count(i) > 0;
        if (!covered)
            supports[std::uniform_int_distribution<std::size_t>(0, ne - 1)(rng)].insert(i);
    }
    std::vector<std::string> names;
    for (std::size_t j = 1; j <= ne; ++j) names.push_back("E" + std::to_string(j));
    std::vector<std::vector<BipolarValue>> rows(vs.size(),
                                                std::vector<BipolarValue>(ne));
    for (std::size_t j = 0; j < ne; ++j)
        for (auto i : supports[j]) rows[i][j] = values[j];
    return BFHypergraph::from_incidence(vs, names, rows);
}

BFHypergraph random_chain_valued(std::mt19937& rng, std::size_t max_vertices,
                                 std::size_t max_edges) {
    auto vs = make_vertices(rng, max_vertices);
    std::size_t ne = std::uniform_int_distribution<std::size_t>(1, max_edges)(rng);

    // dominance chain: p strictly up, n strictly down
    std::size_t k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::set<int> p_steps, n_steps;
    while (p_steps.size() < k) p_steps.insert(std::uniform_int_distribution<int>(1, 10)(rng));
    while (n_steps.size() < k) n_steps.insert(std::uniform_int_distribution<int>(1, 10)(rng));
    std::vector<BipolarValue> chain;
    auto pi = p_steps.begin();
    auto ni = n_steps.begin();
    for (std::size_t i = 0; i < k; ++i, ++pi, ++ni)
        chain.emplace_back(*pi / 10.0, -*ni / 10.0);

    std::vector<std::string> names;
    for (std::size_t j = 1; j <= ne; ++j) names.push_back("E" + std::to_string(j));
    std::vector<std::vector<BipolarValue>> rows(vs.size(),
                                                std::vector<BipolarValue>(ne));
    auto draw = [&]() {
        return chain[std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)];
    };
    std::bernoulli_distribution occupied(0.5);
    for (auto& row : rows)
        for (auto& cell : row)
            if (occupied(rng)) cell = draw();
    for (std::size_t j = 0; j < ne; ++j) {
        bool nontrivial = false;
        for (const auto& row : rows) nontrivial |= !row[j].is_zero();
        if (!nontrivial)
            rows[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)][j] =
                draw();
    }
    for (auto& row : rows) {
        bool covered = false;
        for (const auto& cell : row) covered |= !cell.is_zero();
        if (!covered) row[std::uniform_int_distribution<std::size_t>(0, ne - 1)(rng)] = draw();
    }
    return BFHypergraph::from_incidence(vs, names, rows);
}

TemperingWitness random_witness(std::mt19937& rng, std::size_t max_vertices,
                                std::size_t max_edges) {
    for (;;) {
        auto vs = make_vertices(rng, max_vertices);
        std::size_t ne = std::uniform_int_distribution<std::size_t>(1, max_edges)(rng);
        std::vector<std::set<std::size_t>> edge_sets;
        for (std::size_t j = 0; j < ne; ++j) {
            std::set<std::size_t> e;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (std::bernoulli_distribution(0.5)(rng)) e.insert(i);
            if (e.empty())
                e.insert(std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng));
            if (std::find(edge_sets.begin(), edge_sets.end(), e) == edge_sets.end())
                edge_sets.push_back(e);
        }
        for (std::size_t i = 0; i < vs.size(); ++i) {
            bool covered = false;
            for (const auto& e : edge_sets) covered |= e.count(i) > 0;
            if (!covered) {
                std::set<std::size_t> singleton{i};
                if (std::find(edge_sets.begin(), edge_sets.end(), singleton) ==
                    edge_sets.end())
                    edge_sets.push_back(singleton);
            }
        }
        std::vector<BipolarValue> weights;
        for (std::size_t i = 0; i < vs.size(); ++i) weights.push_back(random_nonzero(rng));

        bool ok = true;
        for (const auto& e : edge_sets) {
            double min_p = 1.0, max_n = -1.0;
            for (auto i : e) {
                min_p = std::min(min_p, weights[i].p);
                max_n = std::max(max_n, weights[i].n);
            }
            if (min_p == 0.0 && max_n == 0.0) ok = false;
        }
        if (!ok) continue;

        std::vector<std::pair<std::string, std::vector<VertexId>>> edges;
        for (std::size_t j = 0; j < edge_sets.size(); ++j) {
            std::vector<VertexId> members;
            for (auto i : edge_sets[j]) members.push_back(vs[i]);
            edges.emplace_back("F" + std::to_string(j + 1), std::move(members));
        }
        return TemperingWitness{CrispHypergraph(vs, std::move(edges)),
                                BipolarFuzzySet(vs, weights)};
    }
}

namespace {

std::vector<std::vector<BipolarValue>> rows_of(const BFHypergraph& h) {
    std::vector<std::vector<BipolarValue>> rows(h.vertex_count(),
                                                std::vector<BipolarValue>(h.edge_count()));
    for (std::size_t i = 0; i < h.vertex_count(); ++i)
        for (std::size_t j = 0; j < h.edge_count(); ++j) rows[i][j] = h.cell(i, j);
    return rows;
}

std::vector<std::string> names_of(const BFHypergraph& h) {
    std::vector<std::string> names;
    for (const auto& e : h.edges()) names.push_back(e.name);
    return names;
}

}  // namespace

std::optional<BFHypergraph> mutate_break_elementary(const BFHypergraph& h,
                                                    std::mt19937& rng) {
    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < h.edge_count(); ++j)
        if (h.support_indices(j).size() >= 2) candidates.push_back(j);
    if (candidates.empty()) return std::nullopt;
    auto j = candidates[std::uniform_int_distribution<std::size_t>(
        0, candidates.size() - 1)(rng)];
    auto supp = h.support_indices(j);
    std::vector<std::size_t> supp_v(supp.begin(), supp.end());
    auto i = supp_v[std::uniform_int_distribution<std::size_t>(0, supp_v.size() - 1)(rng)];
    auto rows = rows_of(h);
    BipolarValue old = rows[i][j];
    BipolarValue fresh = old.p > 0.0 ? BipolarValue(old.p / 2.0, old.n)
                                     : BipolarValue(old.p, old.n / 2.0);
    if (fresh == old || fresh.is_zero()) return std::nullopt;
    rows[i][j] = fresh;
    return BFHypergraph::from_incidence(h.vertices(), names_of(h), rows);
}

std::optional<BFHypergraph> mutate_duplicate_support(const BFHypergraph& h,
                                                     std::mt19937& rng) {
    auto j = std::uniform_int_distribution<std::size_t>(0, h.edge_count() - 1)(rng);
    auto rows = rows_of(h);
    bool has_negative = false;
    for (auto i : h.support_indices(j)) has_negative |= h.cell(i, j).n < 0.0;
    std::vector<BipolarValue> column(h.vertex_count());
    bool distinct = false;
    for (std::size_t i = 0; i < h.vertex_count(); ++i) {
        auto c = h.cell(i, j);
        BipolarValue twin = has_negative ? BipolarValue(c.p, c.n / 2.0)
                                         : BipolarValue(c.p / 2.0, c.n);
        if (c.is_zero()) twin = c;
        distinct |= !(twin == c);
        column[i] = twin;
    }
    if (!distinct) return std::nullopt;
    auto names = names_of(h);
    names.push_back(h.edge(j).name + "d");
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(column[i]);
    return BFHypergraph::from_incidence(h.vertices(), names, rows);
}

std::optional<BFHypergraph> mutate_inject_inner_edge(const BFHypergraph& h,
                                                     std::mt19937& rng) {
    auto fs = h.fundamental_sequence();
    if (fs.cores.empty()) return std::nullopt;
    const auto& last = fs.cores.back();
    if (last.vertex_count() == 0) return std::nullopt;

    std::set<VertexSet> supports;
    for (std::size_t j = 0; j < h.edge_count(); ++j) supports.insert(h.support(j));

    const auto& pool = last.vertices();
    for (int attempt = 0; attempt < 64; ++attempt) {
        VertexSet candidate;
        for (const auto& v : pool)
            if (std::bernoulli_distribution(0.5)(rng)) candidate.insert(v);
        if (candidate.empty()) candidate.insert(pool.front());
        if (supports.count(candidate)) continue;

        double p = fs.levels.back().s / 2.0;
        if (p <= 0.0) continue;
        auto rows = rows_of(h);
        auto names = names_of(h);
        names.push_back("Einj");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            bool member = candidate.count(h.vertices()[i]) > 0;
            rows[i].push_back(member ? BipolarValue(p, -0.05) : BipolarValue());
        }
        return BFHypergraph::from_incidence(h.vertices(), names, rows);
    }
    return std::nullopt;
}

bool crisp_simple_oracle(const CrispHypergraph& h) {
    auto fam = h.edge_family();
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = 0; j < fam.size(); ++j) {
            if (i == j) continue;
            bool contained = std::includes(fam[j].begin(), fam[j].end(), fam[i].begin(),
                                           fam[i].end());
            if (contained) return false;
        }
    return true;
}

bool bf_simple_oracle(const BFHypergraph& h) {
    for (std::size_t a = 0; a < h.edge_count(); ++a)
        for (std::size_t b = 0; b < h.edge_count(); ++b) {
            if (a == b) continue;
            bool dominated = true;
            for (std::size_t i = 0; i < h.vertex_count(); ++i) {
                const auto& va = h.cell(i, a);
                const auto& vb = h.cell(i, b);
                if (!(va.p <= vb.p && va.n >= vb.n)) {
                    dominated = false;
                    break;
                }
            }
            if (dominated) return false;
        }
    return true;
}

std::vector<Family> fseq_family_oracle(const BFHypergraph& h) {
    // every distinct supported membership pair, tightest positive first
    std::vector<std::pair<double, double>> pairs;
    for (std::size_t j = 0; j < h.edge_count(); ++j)
        for (std::size_t i = 0; i < h.vertex_count(); ++i) {
            const auto& c = h.cell(i, j);
            if (c.p > 0.0) pairs.emplace_back(c.p, c.n);
        }
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    });
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    std::vector<Family> out;
    for (const auto& [s, r] : pairs) {
        Family fam;
        for (std::size_t j = 0; j < h.edge_count(); ++j) {
            VertexSet cut;
            for (std::size_t i = 0; i < h.vertex_count(); ++i)
                if (h.cell(i, j).p >= s) cut.insert(h.vertices()[i]);
            if (!cut.empty()) fam.insert(cut);
        }
        if (fam.empty()) continue;
        if (out.empty() || out.back() != fam) out.push_back(fam);
    }
    // consecutive deduplication can still leave an equal non-adjacent
    // family only if the chain is not monotone, which positive cuts forbid
    return out;
}

}  // namespace bfh_test
