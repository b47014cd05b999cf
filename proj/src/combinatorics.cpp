#include "vcdim/combinatorics.hpp"

#include <algorithm>
#include <limits>

namespace vcdim {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<std::size_t> unrank_subset(std::size_t n, std::size_t k, std::uint64_t rank) {
    std::vector<std::size_t> out;
    out.reserve(k);
    std::size_t c = 0;
    for (std::size_t pos = 0; pos < k; ++pos) {
        for (;; ++c) {
            const std::uint64_t count = binomial(n - c - 1, k - pos - 1);
            if (rank < count)
                break;
            rank -= count;
        }
        out.push_back(c++);
    }
    return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace vcdim
