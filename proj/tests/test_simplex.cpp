#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "vcdim/simplex.hpp"

#include <random>

using namespace vcdim;
using namespace vcdim::testing;
using namespace vcdim::lp;

TEST_CASE("problem rows use the signed convention with an augmented 1") {
    auto s = sample(plane_points({{2, 3}, {4, 5}}), "10");
    auto p = HalfspaceLpProblem::from_sample(s);
    CHECK(p.rows == 2);
    CHECK(p.cols == 3);
    CHECK(p.at(0, 0) == 2);
    CHECK(p.at(0, 1) == 3);
    CHECK(p.at(0, 2) == 1);
    CHECK(p.at(1, 0) == -4);
    CHECK(p.at(1, 1) == -5);
    CHECK(p.at(1, 2) == -1);
}

TEST_CASE("exact dot sign") {
    std::vector<double> a = {0.1, 0.2, -0.3};
    std::vector<double> b = {1, 1, 1};
    // In binary, 0.1 + 0.2 - 0.3 is not zero.
    CHECK(exact_dot_sign(a, b) == 1);
    std::vector<double> c = {0.5, 0.25, -0.75};
    CHECK(exact_dot_sign(c, b) == 0);
    std::vector<double> d = {1.0};
    CHECK_THROWS_AS(exact_dot_sign(a, d), ContractViolation);
}

TEST_CASE("float and exact phases agree on random problems") {
    std::mt19937_64 rng(77);
    int feasible = 0, infeasible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const std::size_t d = 1 + rng() % 9;
        auto pts = random_points(rng, d, n, -1, 1);
        LabeledSample s(pts, LabelVector::from_index(d, rng() % (std::uint64_t{1} << d)));
        auto p = HalfspaceLpProblem::from_sample(s);
        auto exact = exact_phase1(p);
        auto full = decide_feasibility(p);
        auto no_filter = decide_feasibility(p, LpOptions{false, 100000});
        CHECK(exact.used_exact_solver);
        CHECK(full.feasible == exact.feasible);
        CHECK(no_filter.feasible == exact.feasible);
        if (full.feasible && full.witness)
            CHECK(strictly_separates(p, *full.witness));
        if (auto w = float_phase1(p); w && strictly_separates(p, *w))
            CHECK(exact.feasible);
        (exact.feasible ? feasible : infeasible)++;
    }
    CHECK(feasible > 20);
    CHECK(infeasible > 20);
}

TEST_CASE("strict separation rejects points on the hyperplane") {
    auto s = sample(line_points({0, 1}), "10");
    auto p = HalfspaceLpProblem::from_sample(s);
    // w = (-1, 1): <w, (0,1)> = 1 > 0, <w, (1,1)> = 0 on the boundary.
    std::vector<double> boundary = {-1, 1};
    CHECK_FALSE(strictly_separates(p, boundary));
    std::vector<double> good = {-2, 1};
    CHECK(strictly_separates(p, good));
}

TEST_CASE("malformed problems are contract violations") {
    HalfspaceLpProblem p;
    CHECK_THROWS_AS(decide_feasibility(p), ContractViolation);
}

TEST_CASE("pivot cap exhaustion is an oracle error") {
    auto s = sample(plane_points({{0, 0}, {1, 1}, {0, 1}, {1, 0}}), "0011");
    auto p = HalfspaceLpProblem::from_sample(s);
    CHECK_THROWS_AS(exact_phase1(p, 0), OracleError);
}
