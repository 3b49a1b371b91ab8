#include "bfh/bipolar.hpp"

#include <algorithm>

namespace bfh {

namespace {

void check_unique_labels(const std::vector<VertexId>& universe) {
    std::set<VertexId> seen;
    for (const auto& v : universe) {
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate vertex label '" + v + "' in universe");
    }
}

}  // namespace

BipolarFuzzySet::BipolarFuzzySet(std::vector<VertexId> universe)
    : universe_(std::move(universe)), values_(universe_.size()) {
    check_unique_labels(universe_);
}

BipolarFuzzySet::BipolarFuzzySet(std::vector<VertexId> universe,
                                 const std::map<VertexId, BipolarValue>& memberships)
    : universe_(std::move(universe)), values_(universe_.size()) {
    check_unique_labels(universe_);
    for (const auto& [v, value] : memberships) values_[index_of(v)] = value;
}

BipolarFuzzySet::BipolarFuzzySet(std::vector<VertexId> universe,
                                 std::vector<BipolarValue> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
    check_unique_labels(universe_);
    if (values_.size() != universe_.size())
        throw std::invalid_argument("membership vector length " +
                                    std::to_string(values_.size()) +
                                    " does not match universe size " +
                                    std::to_string(universe_.size()));
}

std::size_t BipolarFuzzySet::index_of(const VertexId& v) const {
    auto it = std::find(universe_.begin(), universe_.end(), v);
    if (it == universe_.end())
        throw std::invalid_argument("vertex '" + v + "' is not in the universe");
    return static_cast<std::size_t>(it - universe_.begin());
}

bool BipolarFuzzySet::contains(const VertexId& v) const {
    return std::find(universe_.begin(), universe_.end(), v) != universe_.end();
}

const BipolarValue& BipolarFuzzySet::value(const VertexId& v) const {
    return values_[index_of(v)];
}

std::set<VertexId> BipolarFuzzySet::support() const {
    std::set<VertexId> out;
    for (std::size_t i = 0; i < universe_.size(); ++i)
        if (values_[i].p > 0.0 || values_[i].n < 0.0) out.insert(universe_[i]);
    return out;
}

std::set<VertexId> BipolarFuzzySet::positive_support() const {
    std::set<VertexId> out;
    for (std::size_t i = 0; i < universe_.size(); ++i)
        if (values_[i].p > 0.0) out.insert(universe_[i]);
    return out;
}

std::set<VertexId> BipolarFuzzySet::negative_support() const {
    std::set<VertexId> out;
    for (std::size_t i = 0; i < universe_.size(); ++i)
        if (values_[i].n < 0.0) out.insert(universe_[i]);
    return out;
}

namespace {
void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::out_of_range("alpha " + std::to_string(alpha) + " outside [0,1]");
}
}  // namespace

std::set<VertexId> BipolarFuzzySet::positive_alpha_cut(double alpha) const {
    check_alpha(alpha);
    std::set<VertexId> out;
    for (std::size_t i = 0; i < universe_.size(); ++i)
        if (values_[i].p >= alpha) out.insert(universe_[i]);
    return out;
}

std::set<VertexId> BipolarFuzzySet::negative_alpha_cut(double alpha) const {
    check_alpha(alpha);
    std::set<VertexId> out;
    for (std::size_t i = 0; i < universe_.size(); ++i)
        if (values_[i].n <= -alpha) out.insert(universe_[i]);
    return out;
}

std::set<VertexId> BipolarFuzzySet::alpha_cut(double alpha) const {
    check_alpha(alpha);
    std::set<VertexId> out = positive_alpha_cut(alpha);
    auto neg = negative_alpha_cut(alpha);
    out.insert(neg.begin(), neg.end());
    return out;
}

void BipolarFuzzySet::require_nonempty() const {
    if (universe_.empty())
        throw std::domain_error("height/depth undefined on an empty universe");
}

double BipolarFuzzySet::height() const {
    require_nonempty();
    double h = values_[0].p;
    for (const auto& v : values_) h = std::max(h, v.p);
    return h;
}

double BipolarFuzzySet::depth() const {
    require_nonempty();
    double d = values_[0].n;
    for (const auto& v : values_) d = std::min(d, v.n);
    return d;
}

bool BipolarFuzzySet::is_normal() const {
    require_nonempty();
    for (const auto& v : values_)
        if (v.p == 1.0 || v.n == -1.0) return true;
    return false;
}

}  // namespace bfh
