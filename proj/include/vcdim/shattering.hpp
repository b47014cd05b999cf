#pragma once

#include "vcdim/classes.hpp"
#include "vcdim/concept_matrix.hpp"
#include "vcdim/core.hpp"

#include <chrono>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>

namespace vcdim {

// All 2^d labelings in lexicographic order, first point most significant.
class LabelingRange {
public:
    class iterator {
    public:
        using value_type = LabelVector;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        iterator(std::size_t d, std::uint64_t i) : d_(d), i_(i) {}
        LabelVector operator*() const { return LabelVector::from_index(d_, i_); }
        iterator& operator++() {
            ++i_;
            return *this;
        }
        iterator operator++(int) {
            auto t = *this;
            ++i_;
            return t;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.i_ == b.i_; }

    private:
        std::size_t d_ = 1;
        std::uint64_t i_ = 0;
    };

    explicit LabelingRange(std::size_t d);
    iterator begin() const { return {d_, 0}; }
    iterator end() const { return {d_, std::uint64_t{1} << d_}; }
    std::uint64_t size() const { return std::uint64_t{1} << d_; }

private:
    std::size_t d_;
};

// d must be in [1, 62].
LabelingRange enumerate_labelings(std::size_t d);

struct ShatterOptions {
    std::size_t workers = 1;
    // Check only labelings whose first bit is 0. Honored only when the
    // class was declared complement-closed.
    bool use_complement_symmetry = false;
};

struct ShatterVerdict {
    bool shattered = false;
    // Lexicographically smallest labeling the oracle could not realize.
    std::optional<LabelVector> witness;
    // Oracle outcome on the witness labeling.
    std::optional<ErmOutcome> failure;
    // Labelings in the scanned prefix: what a sequential scan evaluates.
    // Independent of the worker count.
    std::uint64_t erm_calls = 0;
    // The "not shattered" answer rests on a budget-exhausted oracle run.
    bool unresolved = false;
    std::chrono::duration<double> elapsed{0};
};

// Raised when the oracle fails on some labeling; carries that labeling.
class ShatterError : public OracleError {
public:
    ShatterError(LabelVector labeling, const std::string& what)
        : OracleError("labeling " + labeling.to_string() + ": " + what),
          labeling_(std::move(labeling)) {}
    const LabelVector& labeling() const { return labeling_; }

private:
    LabelVector labeling_;
};

// Does `h` shatter `points`? Runs the ERM oracle on every labeling and stops
// at the first one without a zero-loss certificate. Verdict, witness and
// erm_calls do not depend on options.workers.
ShatterVerdict shatters(const HypothesisClass& h, const PointSet& points,
                        const ShatterOptions& options = {});

// Independent check for finite classes: counts the distinct row patterns on
// `columns`; shattered iff all 2^d appear.
bool shatters_matrix_reference(const ConceptMatrix& matrix, std::span<const std::size_t> columns);

} // namespace vcdim
