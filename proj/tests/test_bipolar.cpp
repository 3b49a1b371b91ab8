#include "doctest.h"

#include <random>

#include "bfh/bipolar.hpp"

using namespace bfh;

TEST_CASE("membership values are range checked at construction") {
    CHECK_NOTHROW(BipolarValue(0.0, 0.0));
    CHECK_NOTHROW(BipolarValue(1.0, -1.0));
    CHECK_THROWS_AS(BipolarValue(1.2, 0.0), std::out_of_range);
    CHECK_THROWS_AS(BipolarValue(-0.1, 0.0), std::out_of_range);
    CHECK_THROWS_AS(BipolarValue(0.5, 0.1), std::out_of_range);
    CHECK_THROWS_AS(BipolarValue(0.5, -1.5), std::out_of_range);
}

TEST_CASE("support unites the positive and negative sides") {
    BipolarFuzzySet a({"a", "b", "c", "d"},
                      {{"a", {0.2, -0.3}}, {"b", {0.4, -0.5}}});
    CHECK(a.support() == std::set<VertexId>{"a", "b"});

    BipolarFuzzySet zero({"a", "b"});
    CHECK(zero.support().empty());
    CHECK_FALSE(zero.nontrivial());

    BipolarFuzzySet neg({"x"}, {{"x", {0.0, -0.2}}});
    CHECK(neg.support() == std::set<VertexId>{"x"});
    CHECK(neg.negative_support() == std::set<VertexId>{"x"});
    CHECK(neg.positive_support().empty());
}

TEST_CASE("alpha cuts") {
    BipolarFuzzySet a({"x", "y"}, {{"x", {0.4, -0.2}}, {"y", {0.5, -0.3}}});
    CHECK(a.alpha_cut(0.3) == std::set<VertexId>{"x", "y"});
    CHECK(a.positive_alpha_cut(0.3) == std::set<VertexId>{"x", "y"});
    CHECK(a.negative_alpha_cut(0.3) == std::set<VertexId>{"y"});

    CHECK(a.alpha_cut(0.0) == std::set<VertexId>{"x", "y"});  // whole universe

    BipolarFuzzySet extremal({"x"}, {{"x", {1.0, -1.0}}});
    CHECK(extremal.alpha_cut(1.0) == std::set<VertexId>{"x"});

    CHECK_THROWS_AS(a.alpha_cut(1.1), std::out_of_range);
    CHECK_THROWS_AS(a.alpha_cut(-0.1), std::out_of_range);
}

TEST_CASE("height, depth and normality") {
    BipolarFuzzySet a({"x1", "x2", "x3", "x4"},
                      {{"x1", {0.5, -0.3}}, {"x2", {0.4, -0.2}}});
    CHECK(a.height() == 0.5);
    CHECK(a.depth() == -0.3);
    CHECK_FALSE(a.is_normal());

    BipolarFuzzySet zero({"a", "b"});
    CHECK(zero.height() == 0.0);
    CHECK(zero.depth() == 0.0);
    CHECK_FALSE(zero.is_normal());

    BipolarFuzzySet normal({"x"}, {{"x", {1.0, 0.0}}});
    CHECK(normal.is_normal());

    CHECK_THROWS_AS(BipolarFuzzySet({}).height(), std::domain_error);
}

TEST_CASE("membership keys must belong to the universe") {
    CHECK_THROWS_AS(BipolarFuzzySet({"a"}, {{"z", BipolarValue(0.1, 0.0)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(BipolarFuzzySet({"a", "a"}), std::invalid_argument);
}

TEST_CASE("alpha cut is antitone and support matches strict positivity") {
    std::mt19937 rng(7);
    auto grid = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng) / 10.0;
    };
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 5;
        std::vector<VertexId> universe;
        std::vector<BipolarValue> values;
        for (std::size_t i = 0; i < n; ++i) {
            universe.push_back("v" + std::to_string(i));
            values.emplace_back(grid(0, 10), -grid(0, 10));
        }
        BipolarFuzzySet a(universe, values);

        double a1 = grid(0, 10), a2 = grid(0, 10);
        if (a1 > a2) std::swap(a1, a2);
        auto cut2 = a.alpha_cut(a2);
        auto cut1 = a.alpha_cut(a1);
        for (const auto& v : cut2) CHECK(cut1.count(v) == 1);

        auto supp = a.support();
        for (std::size_t i = 0; i < n; ++i) {
            bool in = values[i].p > 0.0 || values[i].n < 0.0;
            CHECK(supp.count(universe[i]) == (in ? 1u : 0u));
        }

        double max_p = 0.0, min_n = 0.0;
        for (const auto& v : values) {
            max_p = std::max(max_p, v.p);
            min_n = std::min(min_n, v.n);
        }
        CHECK(a.height() == max_p);
        CHECK(a.depth() == min_n);
    }
}
