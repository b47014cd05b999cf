#pragma once

// Feasibility of the half-space ERM linear program
//
//     find w  such that  A w >= 1,   A(i,j) = s_i * x~(i,j),
//
// where x~ is the sample point augmented with a constant 1 and s_i = +1 for
// label 1, -1 for label 0. The objective of the LP is the zero vector, so only
// feasibility matters. Decisions are exact: a floating-point phase-1 simplex
// proposes an answer, a feasible proposal is certified by re-checking its
// witness in rational arithmetic, and everything else is re-decided by a
// rational simplex with Bland's rule.

#include "vcdim/core.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace vcdim::lp {

struct HalfspaceLpProblem {
    std::size_t rows = 0;  // one per sample point
    std::size_t cols = 0;  // ambient dimension + 1
    std::vector<double> a; // row-major

    double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static HalfspaceLpProblem from_sample(const LabeledSample& sample);
};

struct LpOptions {
    bool float_prefilter = true;
    // Pivot cap for the rational simplex; Bland's rule cannot cycle, so
    // hitting it means something is badly wrong and an OracleError is raised.
    std::size_t exact_pivot_cap = 100000;
};

struct FeasibilityResult {
    bool feasible = false;
    // Present when feasible and a double-precision witness passed the exact
    // strict-separation check; (w_1..w_n, b) order.
    std::optional<std::vector<double>> witness;
    bool used_exact_solver = false;
};

FeasibilityResult decide_feasibility(const HalfspaceLpProblem& problem, const LpOptions& options = {});

// Individual stages, exposed so tests can drive them separately.
std::optional<std::vector<double>> float_phase1(const HalfspaceLpProblem& problem);
FeasibilityResult exact_phase1(const HalfspaceLpProblem& problem, std::size_t pivot_cap = 100000);

// Exact check that (A w)_i > 0 for every row, i.e. w strictly separates.
bool strictly_separates(const HalfspaceLpProblem& problem, std::span<const double> w);

// Exact sign of <a, b> for double vectors (-1, 0, +1).
int exact_dot_sign(std::span<const double> a, std::span<const double> b);

} // namespace vcdim::lp
