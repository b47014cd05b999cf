#include "vcdim/shattering.hpp"

#include "vcdim/parallel.hpp"

#include <mutex>
#include <unordered_set>

namespace vcdim {

LabelingRange::LabelingRange(std::size_t d) : d_(d) {
    if (d < 1 || d > 62)
        throw ContractViolation("labeling length must be in [1, 62], got " + std::to_string(d));
}

LabelingRange enumerate_labelings(std::size_t d) { return LabelingRange(d); }

ShatterVerdict shatters(const HypothesisClass& h, const PointSet& points, const ShatterOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const std::size_t d = points.size();
    if (d > 62)
        throw ContractViolation("point sets above 62 points cannot be enumerated");
    for (const auto& p : points.points())
        h.check_domain(p);

    const bool halve = options.use_complement_symmetry && h.complement_closed();
    const std::uint64_t total = std::uint64_t{1} << (halve ? d - 1 : d);

    std::mutex failure_mutex;
    std::uint64_t failure_index = total;
    std::optional<ErmOutcome> failure;

    auto search = detail::first_hit(total, options.workers, [&](std::uint64_t i) {
        LabeledSample sample(points, LabelVector::from_index(d, i));
        auto outcome = h.erm(sample);
        certify_outcome(outcome, sample);
        if (outcome.realizable())
            return false;
        std::lock_guard lock(failure_mutex);
        if (i < failure_index) {
            failure_index = i;
            failure = std::move(outcome);
        }
        return true;
    });

    ShatterVerdict verdict;
    if (search.error) {
        auto labeling = LabelVector::from_index(d, *search.error_index);
        try {
            std::rethrow_exception(search.error);
        } catch (const std::exception& e) {
            throw ShatterError(labeling, e.what());
        }
    }
    if (search.hit) {
        verdict.failure = std::move(failure);
        verdict.witness = LabelVector::from_index(d, *search.hit);
        verdict.unresolved = verdict.failure->budget_exhausted;
        verdict.erm_calls = *search.hit + 1;
    } else {
        verdict.shattered = true;
        verdict.erm_calls = total;
    }
    verdict.elapsed = std::chrono::steady_clock::now() - started;
    return verdict;
}

bool shatters_matrix_reference(const ConceptMatrix& matrix, std::span<const std::size_t> columns) {
    const std::size_t d = columns.size();
    if (d == 0 || d > 62)
        throw ContractViolation("column subset size must be in [1, 62]");
    for (std::size_t i = 0; i < d; ++i) {
        if (columns[i] >= matrix.cols())
            throw DomainError("column " + std::to_string(columns[i]) + " out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (columns[i] == columns[j])
                throw ContractViolation("column subset has a repeated column");
    }
    if (d >= 63 || matrix.rows() < (std::uint64_t{1} << d))
        return false;
    std::unordered_set<std::uint64_t> patterns;
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        std::uint64_t key = 0;
        for (auto c : columns)
            key = (key << 1) | matrix.at(r, c);
        patterns.insert(key);
    }
    return patterns.size() == (std::uint64_t{1} << d);
}

} // namespace vcdim
