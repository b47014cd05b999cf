#include "vcdim/exact.hpp"

#include "vcdim/combinatorics.hpp"
#include "vcdim/core.hpp"
#include "vcdim/parallel.hpp"

#include <unordered_set>

namespace vcdim {

namespace {

constexpr std::size_t kBitmapMaxD = 20;

// Distinct rows, each row kept as its 0/1 bytes.
struct PackedRows {
    std::size_t cols;
    std::vector<std::vector<std::uint8_t>> rows;

    explicit PackedRows(const ConceptMatrix& m) : cols(m.cols()) {
        auto canon = m.canonicalized();
        rows.reserve(canon.rows());
        for (std::size_t r = 0; r < canon.rows(); ++r) {
            auto row = canon.row(r);
            rows.emplace_back(row.begin(), row.end());
        }
    }

    std::uint64_t restrict(std::size_t r, const std::vector<std::size_t>& cols_subset) const {
        std::uint64_t key = 0;
        for (auto c : cols_subset)
            key = (key << 1) | rows[r][c];
        return key;
    }

    bool shattered(const std::vector<std::size_t>& subset) const {
        const std::size_t d = subset.size();
        const std::uint64_t need = std::uint64_t{1} << d;
        if (rows.size() < need)
            return false;
        if (d <= kBitmapMaxD) {
            std::vector<bool> seen(need, false);
            std::uint64_t distinct = 0;
            for (std::size_t r = 0; r < rows.size() && distinct < need; ++r) {
                auto key = restrict(r, subset);
                if (!seen[key]) {
                    seen[key] = true;
                    ++distinct;
                }
            }
            return distinct == need;
        }
        std::unordered_set<std::uint64_t> seen;
        for (std::size_t r = 0; r < rows.size(); ++r)
            seen.insert(restrict(r, subset));
        return seen.size() == need;
    }
};

std::optional<std::vector<std::size_t>> first_shattered(const PackedRows& rows, std::size_t d,
                                                        std::size_t workers) {
    if (d == 0 || d > rows.cols || d > 62)
        return std::nullopt;
    if (rows.rows.size() < (std::uint64_t{1} << d))
        return std::nullopt;
    const std::uint64_t total = binomial(rows.cols, d);
    auto search = detail::first_hit(total, workers, [&](std::uint64_t rank) {
        return rows.shattered(unrank_subset(rows.cols, d, rank));
    });
    if (search.error)
        std::rethrow_exception(search.error);
    if (!search.hit)
        return std::nullopt;
    return unrank_subset(rows.cols, d, *search.hit);
}

} // namespace

std::size_t exact_vcdim_matrix(const ConceptMatrix& matrix, const ExactOptions& options) {
    const PackedRows rows(matrix);
    std::size_t vc = 0;
    // Subsets of shattered sets are shattered, so the first size with no
    // shattered subset ends the search.
    for (std::size_t d = 1; d <= rows.cols; ++d) {
        if (!first_shattered(rows, d, options.workers))
            break;
        vc = d;
    }
    return vc;
}

std::optional<std::vector<std::size_t>> exact_shattered_witness(const ConceptMatrix& matrix, std::size_t d,
                                                                const ExactOptions& options) {
    if (d == 0)
        throw ContractViolation("witness size must be positive");
    if (d > matrix.cols())
        return std::nullopt;
    return first_shattered(PackedRows(matrix), d, options.workers);
}

} // namespace vcdim
