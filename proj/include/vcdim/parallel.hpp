#pragma once

// Ordered parallel search with schedule-independent results.
//
// Workers claim contiguous blocks of [0, total) in increasing order and share
// an atomic bound: the smallest index known to stop the search. Blocks past
// the bound are cancelled, so the answer is always the smallest stopping
// index, exactly as a sequential scan would find it.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace vcdim::detail {

struct SearchResult {
    // Smallest index whose visit returned true, if below every error index.
    std::optional<std::uint64_t> hit;
    // Smallest index whose visit threw, if below every hit index.
    std::optional<std::uint64_t> error_index;
    std::exception_ptr error;
};

inline void lower_to(std::atomic<std::uint64_t>& bound, std::uint64_t value) {
    std::uint64_t cur = bound.load();
    while (value < cur && !bound.compare_exchange_weak(cur, value)) {
    }
}

// Calls visit(i) for every i below the returned stopping index (hit or
// error) exactly once; indices above it may or may not be visited. `visit`
// must be safe to call concurrently for distinct indices.
template <class Visit>
SearchResult first_hit(std::uint64_t total, std::size_t workers, Visit&& visit) {
    SearchResult result;
    if (total == 0)
        return result;

    if (workers <= 1 || total == 1) {
        for (std::uint64_t i = 0; i < total; ++i) {
            try {
                if (visit(i)) {
                    result.hit = i;
                    return result;
                }
            } catch (...) {
                result.error_index = i;
                result.error = std::current_exception();
                return result;
            }
        }
        return result;
    }

    const std::uint64_t nthreads = std::min<std::uint64_t>(workers, total);
    const std::uint64_t block = std::clamp<std::uint64_t>(total / (nthreads * 8), 1, 1024);
    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> bound{total};
    std::atomic<std::uint64_t> best_hit{total};
    std::uint64_t best_error = total;
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&] {
        for (;;) {
            const std::uint64_t start = next_block.fetch_add(1) * block;
            if (start >= total || start >= bound.load())
                return;
            const std::uint64_t stop = std::min(total, start + block);
            for (std::uint64_t i = start; i < stop && i < bound.load(); ++i) {
                try {
                    if (visit(i)) {
                        lower_to(best_hit, i);
                        lower_to(bound, i);
                        break;
                    }
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (i < best_error) {
                        best_error = i;
                        error = std::current_exception();
                    }
                    lower_to(bound, i);
                    break;
                }
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(nthreads - 1);
        for (std::uint64_t t = 1; t < nthreads; ++t)
            pool.emplace_back(work);
        work();
    }

    if (best_error < best_hit.load()) {
        result.error_index = best_error;
        result.error = error;
    } else if (best_hit.load() < total) {
        result.hit = best_hit.load();
    }
    return result;
}

} // namespace vcdim::detail
