#include "bfh/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bfh {

std::size_t ClassMatrix::class_index(const std::string& name) const {
    for (std::size_t j = 0; j < classes.size(); ++j)
        if (classes[j].first == name) return j;
    throw std::invalid_argument("unknown class '" + name + "'");
}

ClassMatrix ClassMatrix::from_hypergraph(const BFHypergraph& h) {
    ClassMatrix m;
    m.vertices = h.vertices();
    for (const auto& e : h.edges()) m.classes.emplace_back(e.name, e.cells);
    return m;
}

namespace {

// Micro-unit sum of one membership side across the classes. Components are
// exact six-decimal values by the document contract, so this is exact.
long long micro_sum(const ClassMatrix& m, std::size_t vertex, bool positive) {
    long long total = 0;
    for (const auto& [name, cells] : m.classes) {
        double v = positive ? cells[vertex].p : cells[vertex].n;
        total += std::llround(v * 1e6);
    }
    return total;
}

}  // namespace

BipolarPartition classify(const ClassMatrix& m, double tolerance) {
    if (tolerance < 0.0) throw std::out_of_range("tolerance must be nonnegative");
    BipolarPartition p;
    p.matrix = m;
    p.tolerance = tolerance;

    for (std::size_t i = 0; i < m.vertices.size(); ++i) {
        bool covered = false;
        for (const auto& [name, cells] : m.classes)
            if (!cells[i].is_zero()) {
                covered = true;
                break;
            }
        if (!covered) p.uncovered.push_back(m.vertices[i]);
    }
    p.supports_cover = p.uncovered.empty();

    for (std::size_t i = 0; i < m.vertices.size(); ++i) {
        double pos_residual = static_cast<double>(micro_sum(m, i, true) - 1000000) / 1e6;
        double neg_residual = static_cast<double>(micro_sum(m, i, false) + 1000000) / 1e6;
        if (std::abs(pos_residual) > tolerance || std::abs(neg_residual) > tolerance)
            p.residuals.push_back({m.vertices[i], pos_residual, neg_residual});
    }

    if (p.supports_cover && p.residuals.empty())
        p.kind = PartitionKind::partition;
    else if (p.supports_cover)
        p.kind = PartitionKind::covering;
    else
        p.kind = PartitionKind::invalid;
    return p;
}

BipolarPartition classify(const BFHypergraph& h, double tolerance) {
    return classify(ClassMatrix::from_hypergraph(h), tolerance);
}

CrispHypergraph cut_partition(const BipolarPartition& p, double alpha, double beta) {
    return detail::and_cut_matrix(p.matrix.vertices, p.matrix.classes, alpha, beta);
}

StrengthRanking class_strengths(const BipolarPartition& p, double alpha, double beta) {
    StrengthRanking out;
    for (const auto& [name, cells] : p.matrix.classes) {
        ClassReport report;
        report.class_name = name;
        bool any_p = false, any_n = false;
        for (std::size_t i = 0; i < p.matrix.vertices.size(); ++i) {
            if (!(cells[i].p >= alpha && cells[i].n <= beta)) continue;
            report.cut_members.insert(p.matrix.vertices[i]);
            if (cells[i].p > 0.0) {
                report.strength.p = any_p ? std::max(report.strength.p, cells[i].p)
                                          : cells[i].p;
                any_p = true;
            }
            if (cells[i].n < 0.0) {
                report.strength.n = any_n ? std::max(report.strength.n, cells[i].n)
                                          : cells[i].n;
                any_n = true;
            }
        }
        if (report.cut_members.empty())
            out.empty_classes.push_back(name);
        else
            out.ranked.push_back(std::move(report));
    }
    std::sort(out.ranked.begin(), out.ranked.end(),
              [](const ClassReport& a, const ClassReport& b) {
                  return strength_ranks_before(a.strength, a.class_name, b.strength,
                                               b.class_name);
              });
    for (std::size_t k = 0; k < out.ranked.size(); ++k) out.ranked[k].rank = k + 1;
    return out;
}

std::vector<DecompositionStep> decompose(const BipolarPartition& p, double alpha,
                                         double beta, std::size_t rounds) {
    if (rounds < 1) throw std::out_of_range("rounds must be at least 1");
    std::vector<DecompositionStep> steps;
    BipolarPartition current = p;
    for (std::size_t round = 0; round < rounds; ++round) {
        if (current.matrix.classes.size() <= 1 || current.matrix.vertices.empty()) break;
        auto ranking = class_strengths(current, alpha, beta);
        if (ranking.ranked.empty()) break;
        const ClassReport strongest = ranking.ranked.front();

        ClassMatrix reduced;
        std::vector<std::size_t> kept_rows;
        for (std::size_t i = 0; i < current.matrix.vertices.size(); ++i) {
            if (strongest.cut_members.count(current.matrix.vertices[i])) continue;
            reduced.vertices.push_back(current.matrix.vertices[i]);
            kept_rows.push_back(i);
        }
        for (const auto& [name, cells] : current.matrix.classes) {
            if (name == strongest.class_name) continue;
            std::vector<BipolarValue> reduced_cells;
            reduced_cells.reserve(kept_rows.size());
            for (auto i : kept_rows) reduced_cells.push_back(cells[i]);
            reduced.classes.emplace_back(name, std::move(reduced_cells));
        }
        BipolarPartition remaining = classify(reduced, current.tolerance);
        steps.push_back({strongest, remaining});
        current = std::move(remaining);
    }
    return steps;
}

}  // namespace bfh
