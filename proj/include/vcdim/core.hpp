#pragma once

// Domain types shared by every hypothesis class: points, labels, labeled
// samples, the exact 0-1 loss and the outcome of one ERM invocation.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace vcdim {

// ─── Errors ───────────────────────────────────────────────────
// Precondition of an operation was not met by its caller.
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A point does not belong to the domain of the class it was handed to.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An ERM oracle failed to decide (numerical breakdown, iteration cap).
// Distinct from "not realizable", which is an ordinary answer.
class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ─── Point ────────────────────────────────────────────────────
// Either a finite real vector (continuous domains) or an index into a
// finite domain. Exactly one of the two is held.
class Point {
public:
    static Point continuous(std::vector<double> coordinates);
    static Point finite(std::size_t index);

    bool is_continuous() const { return std::holds_alternative<Coords>(value_); }
    bool is_finite() const { return !is_continuous(); }

    // Number of coordinates; 0 for finite-domain points.
    std::size_t dimension() const;
    std::span<const double> coordinates() const;
    std::size_t index() const;

    std::string to_string() const;

    friend bool operator==(const Point&, const Point&) = default;

private:
    using Coords = std::vector<double>;
    explicit Point(std::variant<Coords, std::size_t> v) : value_(std::move(v)) {}

    std::variant<Coords, std::size_t> value_;
};

// ─── LabelVector ──────────────────────────────────────────────
// A d-tuple in {0,1}^d. Position 0 is the label of the first point.
class LabelVector {
public:
    LabelVector() = default;
    explicit LabelVector(std::size_t size) : bits_(size, 0) {}
    explicit LabelVector(std::vector<std::uint8_t> bits);

    // "0110" -> (0,1,1,0); throws ContractViolation on other characters.
    static LabelVector parse(std::string_view text);

    // Labeling number `index` of {0,1}^d in lexicographic order; the first
    // point's label is the most significant bit.
    static LabelVector from_index(std::size_t d, std::uint64_t index);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }

    std::span<const std::uint8_t> bits() const { return bits_; }
    LabelVector complement() const;
    std::size_t count_ones() const;
    // Inverse of from_index.
    std::uint64_t to_index() const;
    std::string to_string() const;

    friend bool operator==(const LabelVector&, const LabelVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

std::size_t hamming_distance(const LabelVector& a, const LabelVector& b);

// ─── PointSet ─────────────────────────────────────────────────
// Ordered set C = {c_1, ..., c_d} of pairwise distinct points of one kind
// (all continuous with the same dimension, or all finite). Storage is shared
// and immutable, so the 2^d samples built over one set never copy it.
class PointSet {
public:
    explicit PointSet(std::vector<Point> points);

    std::size_t size() const { return points_->size(); }
    const Point& operator[](std::size_t i) const { return (*points_)[i]; }
    std::span<const Point> points() const { return *points_; }

    bool is_continuous() const { return (*points_)[0].is_continuous(); }
    // Coordinate count of the points; 0 for finite-domain sets.
    std::size_t dimension() const { return (*points_)[0].dimension(); }

    // The subset at the given positions (order kept).
    PointSet subset(std::span<const std::size_t> positions) const;

private:
    std::shared_ptr<const std::vector<Point>> points_;
};

// ─── LabeledSample ────────────────────────────────────────────
// S = {(c_1,y_1), ..., (c_d,y_d)}.
class LabeledSample {
public:
    LabeledSample(PointSet points, LabelVector labels);

    std::size_t size() const { return points_.size(); }
    const PointSet& points() const { return points_; }
    const LabelVector& labels() const { return labels_; }
    const Point& point(std::size_t i) const { return points_[i]; }
    std::uint8_t label(std::size_t i) const { return labels_[i]; }

private:
    PointSet points_;
    LabelVector labels_;
};

// ─── Loss ─────────────────────────────────────────────────────
// Empirical 0-1 loss as an exact fraction mismatches / d.
struct Loss {
    std::size_t numerator = 0;
    std::size_t denominator = 1;

    bool is_zero() const { return numerator == 0; }
    double to_double() const { return double(numerator) / double(denominator); }
    std::string to_string() const;

    // Compares the rational values, not the representations.
    friend bool operator==(const Loss& a, const Loss& b) {
        return a.numerator * b.denominator == b.numerator * a.denominator;
    }
};

// L_S(h) for a hypothesis whose predictions on c_1..c_d are given.
Loss empirical_loss(const LabelVector& predictions, const LabeledSample& sample);

// ─── ErmOutcome ───────────────────────────────────────────────
struct ErmOutcome {
    std::size_t loss_numerator = 0;
    std::size_t sample_size = 0;
    // The returned hypothesis evaluated on the sample points.
    std::optional<LabelVector> predictions;
    // Only iterative oracles set this; loss_numerator is then the best loss
    // observed before the budget ran out.
    bool budget_exhausted = false;
    // False when loss_numerator is only a lower-bound marker (> 0 still means
    // "not realizable", but the minimum was not computed).
    bool exact_loss = true;
    // Class-specific extra: a separating (w, b) for half-space oracles,
    // stored as (w_1..w_n, b). Present only when verified exactly.
    std::optional<std::vector<double>> weights;

    Loss loss() const { return {loss_numerator, sample_size}; }
    bool realizable() const { return loss_numerator == 0; }
};

// Checks the ErmOutcome invariants against the sample it was computed on:
// bounds on the loss, predictions consistent with the reported loss, and
// loss 0 carrying predictions equal to the labels. Throws OracleError.
void certify_outcome(const ErmOutcome& outcome, const LabeledSample& sample);

} // namespace vcdim
