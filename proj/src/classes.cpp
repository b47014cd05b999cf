#include "vcdim/classes.hpp"

#include "vcdim/combinatorics.hpp"
#include "vcdim/simplex.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace vcdim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_continuous(const LabeledSample& sample, std::size_t n, const char* what) {
    const auto& pts = sample.points();
    if (!pts.is_continuous() || pts.dimension() != n)
        throw DomainError(std::string(what) + " expects points in R^" + std::to_string(n) +
                          ", got " + pts[0].to_string());
}

// Sample positions ordered by the (single) coordinate.
std::vector<std::size_t> sorted_positions(const LabeledSample& sample) {
    std::vector<std::size_t> order(sample.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sample.point(a).coordinates()[0] < sample.point(b).coordinates()[0];
    });
    return order;
}

ErmOutcome make_outcome(const LabeledSample& sample, LabelVector predictions) {
    ErmOutcome out;
    out.sample_size = sample.size();
    out.loss_numerator = hamming_distance(predictions, sample.labels());
    out.predictions = std::move(predictions);
    return out;
}

bool inside_box(std::span<const double> x, const std::vector<double>& lo,
                const std::vector<double>& hi) {
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] < lo[j] || x[j] > hi[j])
            return false;
    return true;
}

// Predictions of the smallest box containing `members`.
LabelVector box_predictions(const LabeledSample& sample, const std::vector<std::size_t>& members) {
    LabelVector pred(sample.size());
    if (members.empty())
        return pred;
    const std::size_t n = sample.points().dimension();
    std::vector<double> lo(n, std::numeric_limits<double>::infinity());
    std::vector<double> hi(n, -std::numeric_limits<double>::infinity());
    for (auto i : members) {
        auto x = sample.point(i).coordinates();
        for (std::size_t j = 0; j < n; ++j) {
            lo[j] = std::min(lo[j], x[j]);
            hi[j] = std::max(hi[j], x[j]);
        }
    }
    for (std::size_t i = 0; i < sample.size(); ++i)
        pred.set(i, inside_box(sample.point(i).coordinates(), lo, hi));
    return pred;
}

std::vector<double> augmented(const Point& p) {
    auto c = p.coordinates();
    std::vector<double> x(c.begin(), c.end());
    x.push_back(1.0);
    return x;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        s += a[j] * b[j];
    return s;
}

} // namespace

std::string to_string(ClassKind kind) {
    switch (kind) {
    case ClassKind::threshold: return "threshold";
    case ClassKind::interval: return "interval";
    case ClassKind::rectangle: return "rectangle";
    case ClassKind::halfspace_lp: return "halfspace-lp";
    case ClassKind::halfspace_perceptron: return "halfspace-perceptron";
    case ClassKind::finite_matrix: return "finite";
    }
    return "unknown";
}

HypothesisClass::HypothesisClass(Variant v) : impl_(std::move(v)) {
    std::visit(overloaded{
                   [](const ThresholdClass&) {},
                   [](const IntervalClass&) {},
                   [](const RectangleClass& c) {
                       if (c.dimension < 1)
                           throw ContractViolation("rectangle dimension must be >= 1");
                   },
                   [](const HalfspaceLpClass& c) {
                       if (c.dimension < 1)
                           throw ContractViolation("half-space dimension must be >= 1");
                   },
                   [](const HalfspacePerceptronClass& c) {
                       if (c.dimension < 1)
                           throw ContractViolation("half-space dimension must be >= 1");
                       if (c.budget < 1)
                           throw ContractViolation("perceptron budget must be >= 1");
                   },
                   [](const FiniteMatrixClass& c) {
                       if (!c.matrix)
                           throw ContractViolation("finite class needs a concept matrix");
                   },
               },
               impl_);
}

HypothesisClass HypothesisClass::rectangle(std::size_t n) { return HypothesisClass(RectangleClass{n}); }

HypothesisClass HypothesisClass::halfspace_lp(std::size_t n) {
    return HypothesisClass(HalfspaceLpClass{n});
}

HypothesisClass HypothesisClass::halfspace_perceptron(std::size_t n, std::size_t budget) {
    return HypothesisClass(HalfspacePerceptronClass{n, budget});
}

HypothesisClass HypothesisClass::finite(ConceptMatrix matrix) {
    return HypothesisClass(FiniteMatrixClass{std::make_shared<const ConceptMatrix>(std::move(matrix))});
}

ClassKind HypothesisClass::kind() const {
    return std::visit(overloaded{
                          [](const ThresholdClass&) { return ClassKind::threshold; },
                          [](const IntervalClass&) { return ClassKind::interval; },
                          [](const RectangleClass&) { return ClassKind::rectangle; },
                          [](const HalfspaceLpClass&) { return ClassKind::halfspace_lp; },
                          [](const HalfspacePerceptronClass&) { return ClassKind::halfspace_perceptron; },
                          [](const FiniteMatrixClass&) { return ClassKind::finite_matrix; },
                      },
                      impl_);
}

std::string HypothesisClass::name() const {
    auto base = to_string(kind());
    if (kind() == ClassKind::threshold || kind() == ClassKind::interval)
        return base;
    if (kind() == ClassKind::finite_matrix)
        return base + "(" + std::to_string(matrix().rows()) + "x" + std::to_string(matrix().cols()) + ")";
    return base + "(" + std::to_string(dimension()) + ")";
}

std::size_t HypothesisClass::dimension() const {
    return std::visit(overloaded{
                          [](const ThresholdClass&) -> std::size_t { return 1; },
                          [](const IntervalClass&) -> std::size_t { return 1; },
                          [](const RectangleClass& c) { return c.dimension; },
                          [](const HalfspaceLpClass& c) { return c.dimension; },
                          [](const HalfspacePerceptronClass& c) { return c.dimension; },
                          [](const FiniteMatrixClass& c) { return c.matrix->cols(); },
                      },
                      impl_);
}

std::size_t HypothesisClass::domain_cardinality() const {
    if (!has_finite_domain())
        throw ContractViolation(name() + " has an infinite domain");
    return matrix().cols();
}

const ConceptMatrix& HypothesisClass::matrix() const {
    if (auto* f = std::get_if<FiniteMatrixClass>(&impl_))
        return *f->matrix;
    throw ContractViolation(name() + " is not a finite class");
}

void HypothesisClass::check_domain(const Point& p) const {
    if (has_finite_domain()) {
        if (!p.is_finite())
            throw DomainError(name() + " expects index points, got " + p.to_string());
        if (p.index() >= matrix().cols())
            throw DomainError("point index " + std::to_string(p.index()) +
                              " outside domain of size " + std::to_string(matrix().cols()));
        return;
    }
    if (!p.is_continuous() || p.dimension() != dimension())
        throw DomainError(name() + " expects points in R^" + std::to_string(dimension()) +
                          ", got " + p.to_string());
}

ErmOutcome HypothesisClass::erm(const LabeledSample& sample) const {
    return std::visit(overloaded{
                          [&](const ThresholdClass&) { return threshold_erm(sample); },
                          [&](const IntervalClass&) { return interval_erm(sample); },
                          [&](const RectangleClass& c) {
                              require_continuous(sample, c.dimension, "rectangle class");
                              return rectangle_erm(sample, c.exact_cap);
                          },
                          [&](const HalfspaceLpClass& c) {
                              require_continuous(sample, c.dimension, "half-space class");
                              return halfspace_erm_lp(sample, c.exact_cap);
                          },
                          [&](const HalfspacePerceptronClass& c) {
                              require_continuous(sample, c.dimension, "half-space class");
                              return halfspace_erm_perceptron(sample, c.budget);
                          },
                          [&](const FiniteMatrixClass& c) { return finite_class_erm(*c.matrix, sample); },
                      },
                      impl_);
}

ErmOutcome threshold_erm(const LabeledSample& sample) {
    require_continuous(sample, 1, "threshold class");
    const auto order = sorted_positions(sample);
    const std::size_t d = sample.size();

    // Cut k predicts 1 on the k smallest points.
    std::size_t loss = sample.labels().count_ones(); // k = 0
    std::size_t best = loss, best_k = 0;
    for (std::size_t k = 1; k <= d; ++k) {
        loss += sample.label(order[k - 1]) ? -1 : 1;
        if (loss < best) {
            best = loss;
            best_k = k;
        }
    }
    LabelVector pred(d);
    for (std::size_t k = 0; k < best_k; ++k)
        pred.set(order[k], true);
    return make_outcome(sample, std::move(pred));
}

ErmOutcome interval_erm(const LabeledSample& sample) {
    require_continuous(sample, 1, "interval class");
    const auto order = sorted_positions(sample);
    const std::size_t d = sample.size();

    // ones[k] / zeros[k]: label counts among the k smallest points.
    std::vector<std::size_t> ones(d + 1, 0);
    for (std::size_t k = 0; k < d; ++k)
        ones[k + 1] = ones[k] + sample.label(order[k]);
    const std::size_t total_ones = ones[d];

    // The interval covers sorted positions [lo, hi); lo == hi is empty.
    std::size_t best = total_ones, best_lo = 0, best_hi = 0;
    for (std::size_t lo = 0; lo < d; ++lo) {
        for (std::size_t hi = lo + 1; hi <= d; ++hi) {
            const std::size_t in_ones = ones[hi] - ones[lo];
            const std::size_t in_zeros = (hi - lo) - in_ones;
            const std::size_t loss = (total_ones - in_ones) + in_zeros;
            if (loss < best) {
                best = loss;
                best_lo = lo;
                best_hi = hi;
            }
        }
    }
    LabelVector pred(d);
    for (std::size_t k = best_lo; k < best_hi; ++k)
        pred.set(order[k], true);
    return make_outcome(sample, std::move(pred));
}

ErmOutcome rectangle_erm(const LabeledSample& sample, std::size_t exact_cap) {
    if (!sample.points().is_continuous())
        throw DomainError("rectangle class expects continuous points");
    std::vector<std::size_t> positives;
    for (std::size_t i = 0; i < sample.size(); ++i)
        if (sample.label(i))
            positives.push_back(i);

    // The bounding box of the positives is the smallest candidate that
    // catches all of them; realizable iff it holds no negative point.
    auto out = make_outcome(sample, box_predictions(sample, positives));
    if (out.loss_numerator == 0)
        return out;

    if (sample.size() > exact_cap) {
        out.exact_loss = false;
        return out;
    }
    // Any box predicts exactly the points inside the bounding box of the
    // positives it contains, so scanning subsets of positives is exhaustive.
    out = make_outcome(sample, LabelVector(sample.size()));
    const std::size_t p = positives.size();
    std::vector<std::size_t> members;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p); ++mask) {
        members.clear();
        for (std::size_t b = 0; b < p; ++b)
            if (mask >> b & 1u)
                members.push_back(positives[b]);
        auto pred = box_predictions(sample, members);
        if (hamming_distance(pred, sample.labels()) < out.loss_numerator)
            out = make_outcome(sample, std::move(pred));
    }
    return out;
}

ErmOutcome halfspace_erm_lp(const LabeledSample& sample, std::size_t exact_cap) {
    if (!sample.points().is_continuous())
        throw DomainError("half-space class expects continuous points");
    const auto problem = lp::HalfspaceLpProblem::from_sample(sample);
    auto result = lp::decide_feasibility(problem);

    ErmOutcome out;
    out.sample_size = sample.size();
    if (result.feasible) {
        out.loss_numerator = 0;
        out.predictions = sample.labels();
        out.weights = std::move(result.witness);
        return out;
    }

    const std::size_t d = sample.size();
    if (d > exact_cap) {
        out.loss_numerator = 1;
        out.exact_loss = false;
        return out;
    }

    // Smallest set of points whose removal leaves a separable sample. Its
    // separator misclassifies at most the removed points, and by minimality
    // exactly that many.
    std::vector<std::size_t> all(d);
    std::iota(all.begin(), all.end(), std::size_t{0});
    for (std::size_t k = 1; k < d; ++k) {
        std::vector<std::size_t> drop(k);
        std::iota(drop.begin(), drop.end(), std::size_t{0});
        do {
            std::vector<std::size_t> keep;
            std::set_difference(all.begin(), all.end(), drop.begin(), drop.end(),
                                std::back_inserter(keep));
            LabelVector kept_labels(keep.size());
            for (std::size_t i = 0; i < keep.size(); ++i)
                kept_labels.set(i, sample.label(keep[i]));
            LabeledSample sub(sample.points().subset(keep), std::move(kept_labels));
            auto r = lp::decide_feasibility(lp::HalfspaceLpProblem::from_sample(sub));
            if (!r.feasible)
                continue;
            out.loss_numerator = k;
            if (r.witness) {
                LabelVector pred(d);
                for (std::size_t i = 0; i < d; ++i)
                    pred.set(i, lp::exact_dot_sign(augmented(sample.point(i)), *r.witness) > 0);
                out.loss_numerator = hamming_distance(pred, sample.labels());
                out.predictions = std::move(pred);
                out.weights = std::move(r.witness);
            }
            return out;
        } while (next_combination(drop, d));
    }
    // Unreachable for d >= 2: a constant hypothesis errs on min(#0, #1) < d
    // points. A single point is always separable.
    throw OracleError("half-space LP found no separable sub-sample");
}

ErmOutcome halfspace_erm_perceptron(const LabeledSample& sample, std::size_t budget) {
    if (!sample.points().is_continuous())
        throw DomainError("half-space class expects continuous points");
    if (budget < 1)
        throw ContractViolation("perceptron budget must be >= 1");

    const std::size_t d = sample.size();
    std::vector<std::vector<double>> xs;
    std::vector<double> sign(d);
    xs.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        xs.push_back(augmented(sample.point(i)));
        sign[i] = sample.label(i) ? 1.0 : -1.0;
    }
    std::vector<double> w(xs[0].size(), 0.0);
    std::size_t updates = 0;
    bool exhausted = false;

    auto update = [&](std::size_t i) {
        for (std::size_t j = 0; j < w.size(); ++j)
            w[j] += sign[i] * xs[i][j];
        ++updates;
    };
    auto predict = [&] {
        LabelVector pred(d);
        for (std::size_t i = 0; i < d; ++i)
            pred.set(i, dot(w, xs[i]) > 0.0);
        return pred;
    };

    // Loss d is the worst case; zero is only ever returned after an exact check.
    ErmOutcome best = make_outcome(sample, sample.labels().complement());
    while (!exhausted) {
        std::size_t mistakes = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (sign[i] * dot(w, xs[i]) > 0.0)
                continue;
            if (updates == budget) {
                exhausted = true;
                break;
            }
            update(i);
            ++mistakes;
        }
        if (!exhausted && mistakes == 0) {
            // Floating-point said every margin is positive; confirm exactly.
            std::size_t bad = d;
            for (std::size_t i = 0; i < d && bad == d; ++i)
                if (lp::exact_dot_sign(w, xs[i]) * int(sign[i]) <= 0)
                    bad = i;
            if (bad == d) {
                ErmOutcome out = make_outcome(sample, sample.labels());
                out.weights = w;
                return out;
            }
            if (updates == budget)
                exhausted = true;
            else
                update(bad);
        }
        auto current = make_outcome(sample, predict());
        if (current.loss_numerator < best.loss_numerator && current.loss_numerator > 0)
            best = std::move(current);
    }
    best.budget_exhausted = true;
    return best;
}

ErmOutcome finite_class_erm(const ConceptMatrix& matrix, const LabeledSample& sample) {
    const auto& pts = sample.points();
    if (pts.is_continuous())
        throw DomainError("finite class expects index points");
    for (std::size_t i = 0; i < sample.size(); ++i)
        if (pts[i].index() >= matrix.cols())
            throw DomainError("point index " + std::to_string(pts[i].index()) +
                              " outside domain of size " + std::to_string(matrix.cols()));

    std::size_t best = sample.size() + 1, best_row = 0;
    for (std::size_t r = 0; r < matrix.rows() && best > 0; ++r) {
        std::size_t loss = 0;
        for (std::size_t i = 0; i < sample.size(); ++i)
            loss += matrix.at(r, pts[i].index()) != sample.label(i);
        if (loss < best) {
            best = loss;
            best_row = r;
        }
    }
    LabelVector pred(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i)
        pred.set(i, matrix.at(best_row, pts[i].index()));
    return make_outcome(sample, std::move(pred));
}

} // namespace vcdim
