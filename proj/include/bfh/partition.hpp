#pragma once

#include <string>
#include <vector>

#include "bfh/hypergraph.hpp"

namespace bfh {

/// Raw class-membership matrix: the incidence view of a candidate bipolar
/// fuzzy partition. Unlike BFHypergraph it carries no covering or
/// nontriviality invariant, so validators can report violations as data
/// instead of refusing to construct.
struct ClassMatrix {
    std::vector<VertexId> vertices;
    std::vector<std::pair<std::string, std::vector<BipolarValue>>> classes;

    std::size_t class_index(const std::string& name) const;
    static ClassMatrix from_hypergraph(const BFHypergraph& h);
};

enum class PartitionKind { partition, covering, invalid };

struct VertexResidual {
    VertexId vertex;
    double positive_residual = 0.0;  // sum of p minus 1
    double negative_residual = 0.0;  // sum of n plus 1
};

struct BipolarPartition {
    ClassMatrix matrix;
    PartitionKind kind = PartitionKind::invalid;
    bool supports_cover = false;
    std::vector<VertexId> uncovered;       // vertices in no class support
    std::vector<VertexResidual> residuals; // vertices violating the sum conditions
    double tolerance = 0.0;
};

/// Checks the partition conditions: supports cover the universe, per-vertex
/// positive memberships sum to 1 and negative memberships sum to -1 within
/// the tolerance. Sums are evaluated in micro-units, matching the document
/// format's six-decimal contract, so exact-decimal inputs validate exactly.
BipolarPartition classify(const ClassMatrix& m, double tolerance = 1e-9);
BipolarPartition classify(const BFHypergraph& h, double tolerance = 1e-9);

/// AND-semantics cut of the classes with the remainder class appended as
/// class m+1 when nonempty.
CrispHypergraph cut_partition(const BipolarPartition& p, double alpha, double beta);

struct ClassReport {
    std::string class_name;
    VertexSet cut_members;
    Strength strength;
    std::size_t rank = 0;
};

struct StrengthRanking {
    std::vector<ClassReport> ranked;          // strongest first
    std::vector<std::string> empty_classes;   // classes with empty cuts, excluded
};

/// Strength of every class at the (alpha,beta)-cut, computed from the
/// original memberships restricted to the cut members, ranked strongest
/// first. The remainder class never participates.
StrengthRanking class_strengths(const BipolarPartition& p, double alpha, double beta);

struct DecompositionStep {
    ClassReport removed;
    BipolarPartition remaining;
};

/// Greedy strongest-class decomposition: rank the classes at (alpha,beta),
/// remove the strongest class and its cut members from the universe, and
/// repeat on the reduced matrix until the rounds are exhausted or at most
/// one class remains.
std::vector<DecompositionStep> decompose(const BipolarPartition& p, double alpha,
                                         double beta, std::size_t rounds);

}  // namespace bfh
