#include "vcdim/simplex.hpp"

#include <gmpxx.h>

#include <cmath>
#include <limits>

namespace vcdim::lp {

HalfspaceLpProblem HalfspaceLpProblem::from_sample(const LabeledSample& sample) {
    const auto& pts = sample.points();
    if (!pts.is_continuous())
        throw DomainError("half-space LP needs continuous points");
    HalfspaceLpProblem p;
    p.rows = sample.size();
    p.cols = pts.dimension() + 1;
    p.a.reserve(p.rows * p.cols);
    for (std::size_t i = 0; i < p.rows; ++i) {
        const double s = sample.label(i) ? 1.0 : -1.0;
        for (double x : pts[i].coordinates())
            p.a.push_back(s * x);
        p.a.push_back(s);
    }
    return p;
}

namespace {

template <class T>
struct NumTraits;

template <>
struct NumTraits<double> {
    static constexpr double eps = 1e-9;
    static bool positive(double x) { return x > eps; }
    static bool negative(double x) { return x < -eps; }
    static bool nonzero(double x) { return std::fabs(x) > 1e-14; }
};

template <>
struct NumTraits<mpq_class> {
    static bool positive(const mpq_class& x) { return sgn(x) > 0; }
    static bool negative(const mpq_class& x) { return sgn(x) < 0; }
    static bool nonzero(const mpq_class& x) { return sgn(x) != 0; }
};

// Phase 1 of the primal simplex on
//     A w+ - A w- - s + r = 1,   w+, w-, s, r >= 0,   minimize sum(r).
// Column layout: [w+ (k) | w- (k) | s (m) | r (m) | rhs].
template <class T>
class Phase1 {
public:
    Phase1(const HalfspaceLpProblem& p)
        : m_(p.rows), k_(p.cols), nvar_(2 * k_ + 2 * m_), width_(nvar_ + 1),
          tab_((m_ + 1) * width_, T(0)), basis_(m_) {
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < k_; ++j) {
                cell(i, j) = T(p.at(i, j));
                cell(i, k_ + j) = -cell(i, j);
            }
            cell(i, 2 * k_ + i) = T(-1);
            cell(i, 2 * k_ + m_ + i) = T(1);
            cell(i, nvar_) = T(1);
            basis_[i] = 2 * k_ + m_ + i;
        }
        // Reduced costs of the phase-1 objective with the artificials basic.
        for (std::size_t j = 0; j < width_; ++j) {
            if (j >= 2 * k_ + m_ && j < nvar_)
                continue;
            T sum(0);
            for (std::size_t i = 0; i < m_; ++i)
                sum += cell(i, j);
            cell(m_, j) = -sum;
        }
    }

    // Runs to optimality. Returns false when the pivot cap was hit.
    bool solve(std::size_t pivot_cap) {
        using N = NumTraits<T>;
        for (std::size_t it = 0; it < pivot_cap; ++it) {
            std::size_t enter = nvar_;
            for (std::size_t j = 0; j < 2 * k_ + m_; ++j)
                if (N::negative(cell(m_, j))) {
                    enter = j;
                    break;
                }
            if (enter == nvar_)
                return true;

            std::size_t leave = m_;
            T best_ratio(0);
            for (std::size_t i = 0; i < m_; ++i) {
                if (!N::positive(cell(i, enter)))
                    continue;
                T ratio = cell(i, nvar_) / cell(i, enter);
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m_)
                throw OracleError("phase-1 simplex reported an unbounded direction");
            pivot(leave, enter);
        }
        return false;
    }

    // Value of sum(r) at the current basis.
    T infeasibility() const { return -cell(m_, nvar_); }

    std::vector<T> weights() const {
        std::vector<T> value(nvar_, T(0));
        for (std::size_t i = 0; i < m_; ++i)
            value[basis_[i]] = cell(i, nvar_);
        std::vector<T> w(k_);
        for (std::size_t j = 0; j < k_; ++j)
            w[j] = value[j] - value[k_ + j];
        return w;
    }

private:
    T& cell(std::size_t i, std::size_t j) { return tab_[i * width_ + j]; }
    const T& cell(std::size_t i, std::size_t j) const { return tab_[i * width_ + j]; }

    void pivot(std::size_t r, std::size_t c) {
        using N = NumTraits<T>;
        const T piv = cell(r, c);
        for (std::size_t j = 0; j < width_; ++j)
            if (N::nonzero(cell(r, j)))
                cell(r, j) /= piv;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r || !N::nonzero(cell(i, c)))
                continue;
            const T factor = cell(i, c);
            for (std::size_t j = 0; j < width_; ++j)
                if (N::nonzero(cell(r, j)))
                    cell(i, j) -= factor * cell(r, j);
            cell(i, c) = T(0);
        }
        basis_[r] = c;
    }

    std::size_t m_, k_, nvar_, width_;
    std::vector<T> tab_;
    std::vector<std::size_t> basis_;
};

} // namespace

std::optional<std::vector<double>> float_phase1(const HalfspaceLpProblem& problem) {
    Phase1<double> lp(problem);
    if (!lp.solve(50 * (problem.rows + problem.cols) + 100))
        return std::nullopt;
    if (!(lp.infeasibility() < 1e-7))
        return std::nullopt;
    return lp.weights();
}

FeasibilityResult exact_phase1(const HalfspaceLpProblem& problem, std::size_t pivot_cap) {
    Phase1<mpq_class> lp(problem);
    if (!lp.solve(pivot_cap))
        throw OracleError("rational simplex exceeded its pivot cap");
    FeasibilityResult result;
    result.used_exact_solver = true;
    result.feasible = sgn(lp.infeasibility()) == 0;
    if (result.feasible) {
        std::vector<double> w;
        for (const auto& q : lp.weights())
            w.push_back(q.get_d());
        if (strictly_separates(problem, w))
            result.witness = std::move(w);
    }
    return result;
}

FeasibilityResult decide_feasibility(const HalfspaceLpProblem& problem, const LpOptions& options) {
    if (problem.rows == 0 || problem.cols == 0 || problem.a.size() != problem.rows * problem.cols)
        throw ContractViolation("malformed half-space LP");
    if (options.float_prefilter) {
        if (auto w = float_phase1(problem); w && strictly_separates(problem, *w)) {
            FeasibilityResult result;
            result.feasible = true;
            result.witness = std::move(*w);
            return result;
        }
    }
    return exact_phase1(problem, options.exact_pivot_cap);
}

int exact_dot_sign(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw ContractViolation("dot product of vectors with different lengths");
    mpq_class sum(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0 || b[i] == 0.0)
            continue;
        sum += mpq_class(a[i]) * mpq_class(b[i]);
    }
    return sgn(sum);
}

bool strictly_separates(const HalfspaceLpProblem& problem, std::span<const double> w) {
    if (w.size() != problem.cols)
        return false;
    for (double x : w)
        if (!std::isfinite(x))
            return false;
    for (std::size_t i = 0; i < problem.rows; ++i) {
        std::span<const double> row(problem.a.data() + i * problem.cols, problem.cols);
        if (exact_dot_sign(row, w) <= 0)
            return false;
    }
    return true;
}

} // namespace vcdim::lp
