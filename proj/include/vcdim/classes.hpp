#pragma once

// Built-in hypothesis classes and their ERM oracles.
//
// Every oracle honors the completeness contract: when some hypothesis of the
// class has zero loss on the sample, the oracle returns loss 0 together with
// predictions equal to the labels. Iterative oracles (the perceptron) honor
// it only up to their budget and say so through ErmOutcome::budget_exhausted.

#include "vcdim/concept_matrix.hpp"
#include "vcdim/core.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace vcdim {

inline constexpr std::size_t kRectangleExactCap = 12;
inline constexpr std::size_t kHalfspaceExactCap = 16;
inline constexpr std::size_t kDefaultPerceptronBudget = 10000;

// h_a(x) = 1 iff x <= a, a ranging over R and +-infinity.
struct ThresholdClass {};

// Indicator of a closed interval [a, b] (possibly empty).
struct IntervalClass {};

// Indicator of an axis-aligned box in R^n (possibly empty).
struct RectangleClass {
    std::size_t dimension = 2;
    std::size_t exact_cap = kRectangleExactCap;
};

// Nonhomogeneous half-spaces in R^n decided by LP feasibility.
struct HalfspaceLpClass {
    std::size_t dimension = 2;
    std::size_t exact_cap = kHalfspaceExactCap;
};

// Nonhomogeneous half-spaces in R^n learned by the Rosenblatt perceptron.
struct HalfspacePerceptronClass {
    std::size_t dimension = 2;
    std::size_t budget = kDefaultPerceptronBudget;
};

// Finite class given row by row.
struct FiniteMatrixClass {
    std::shared_ptr<const ConceptMatrix> matrix;
};

enum class ClassKind { threshold, interval, rectangle, halfspace_lp, halfspace_perceptron, finite_matrix };

std::string to_string(ClassKind kind);

class HypothesisClass {
public:
    using Variant = std::variant<ThresholdClass, IntervalClass, RectangleClass, HalfspaceLpClass,
                                 HalfspacePerceptronClass, FiniteMatrixClass>;

    static HypothesisClass threshold() { return HypothesisClass(ThresholdClass{}); }
    static HypothesisClass interval() { return HypothesisClass(IntervalClass{}); }
    static HypothesisClass rectangle(std::size_t n);
    static HypothesisClass halfspace_lp(std::size_t n);
    static HypothesisClass halfspace_perceptron(std::size_t n,
                                                std::size_t budget = kDefaultPerceptronBudget);
    static HypothesisClass finite(ConceptMatrix matrix);

    explicit HypothesisClass(Variant v);

    ClassKind kind() const;
    std::string name() const;
    const Variant& variant() const { return impl_; }

    bool has_finite_domain() const { return kind() == ClassKind::finite_matrix; }
    // Coordinate count for continuous classes; column count for finite ones.
    std::size_t dimension() const;
    std::size_t domain_cardinality() const;
    const ConceptMatrix& matrix() const;

    // Opt-in: the class is closed under h -> 1 - h, so a shattering check may
    // skip complemented labelings. Never inferred; the caller vouches for it.
    bool complement_closed() const { return complement_closed_; }
    HypothesisClass& assume_complement_closed(bool closed = true) {
        complement_closed_ = closed;
        return *this;
    }

    // Throws DomainError when the point is outside the class's domain.
    void check_domain(const Point& p) const;

    ErmOutcome erm(const LabeledSample& sample) const;

private:
    Variant impl_;
    bool complement_closed_ = false;
};

// erm_oracle(class, sample)
inline ErmOutcome erm_oracle(const HypothesisClass& h, const LabeledSample& sample) {
    return h.erm(sample);
}

// Individual oracles. Each validates the sample against its domain.
ErmOutcome threshold_erm(const LabeledSample& sample);
ErmOutcome interval_erm(const LabeledSample& sample);
ErmOutcome rectangle_erm(const LabeledSample& sample, std::size_t exact_cap = kRectangleExactCap);
ErmOutcome halfspace_erm_lp(const LabeledSample& sample, std::size_t exact_cap = kHalfspaceExactCap);
ErmOutcome halfspace_erm_perceptron(const LabeledSample& sample,
                                    std::size_t budget = kDefaultPerceptronBudget);
ErmOutcome finite_class_erm(const ConceptMatrix& matrix, const LabeledSample& sample);

} // namespace vcdim
