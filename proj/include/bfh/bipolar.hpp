#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bfh {

/// Vertex labels are opaque string tokens, unique within one structure.
using VertexId = std::string;

/// A bipolar membership value: a positive satisfaction degree p in [0,1]
/// paired with a negative (counter-property) degree n in [-1,0].
/// (0,0) is the neutral value: the element is irrelevant to the property.
struct BipolarValue {
    double p = 0.0;
    double n = 0.0;

    BipolarValue() = default;

    BipolarValue(double pos, double neg) : p(pos), n(neg) {
        if (!(pos >= 0.0 && pos <= 1.0))
            throw std::out_of_range("positive degree " + std::to_string(pos) +
                                    " outside [0,1]");
        if (!(neg >= -1.0 && neg <= 0.0))
            throw std::out_of_range("negative degree " + std::to_string(neg) +
                                    " outside [-1,0]");
        if (n == 0.0) n = 0.0;  // normalize -0.0
        if (p == 0.0) p = 0.0;
    }

    bool is_zero() const { return p == 0.0 && n == 0.0; }

    bool operator==(const BipolarValue& o) const { return p == o.p && n == o.n; }
    bool operator!=(const BipolarValue& o) const { return !(*this == o); }
};

/// Pointwise dominance: a <= b when b has at least the positive degree and
/// at most the negative degree of a. This is the order used by the
/// simplicity predicates.
inline bool value_leq(const BipolarValue& a, const BipolarValue& b) {
    return a.p <= b.p && a.n >= b.n;
}

/// A bipolar fuzzy set over a finite ordered universe. Vertices absent from
/// the membership map read as (0,0); they are never an error.
class BipolarFuzzySet {
public:
    explicit BipolarFuzzySet(std::vector<VertexId> universe);
    BipolarFuzzySet(std::vector<VertexId> universe,
                    const std::map<VertexId, BipolarValue>& memberships);
    BipolarFuzzySet(std::vector<VertexId> universe, std::vector<BipolarValue> values);

    const std::vector<VertexId>& universe() const { return universe_; }
    std::size_t size() const { return universe_.size(); }

    const BipolarValue& value(const VertexId& v) const;
    const BipolarValue& value_at(std::size_t i) const { return values_.at(i); }
    bool contains(const VertexId& v) const;

    std::set<VertexId> support() const;
    std::set<VertexId> positive_support() const;
    std::set<VertexId> negative_support() const;
    bool nontrivial() const { return !support().empty(); }

    /// Positive cut {x | p >= alpha} united with negative cut {x | n <= -alpha}.
    std::set<VertexId> alpha_cut(double alpha) const;
    std::set<VertexId> positive_alpha_cut(double alpha) const;
    std::set<VertexId> negative_alpha_cut(double alpha) const;

    double height() const;  // max p over the universe
    double depth() const;   // min n over the universe
    bool is_normal() const; // some p = 1 or some n = -1

    bool operator==(const BipolarFuzzySet& o) const {
        return universe_ == o.universe_ && values_ == o.values_;
    }

private:
    std::size_t index_of(const VertexId& v) const;
    void require_nonempty() const;

    std::vector<VertexId> universe_;
    std::vector<BipolarValue> values_;  // aligned with universe_
};

}  // namespace bfh
