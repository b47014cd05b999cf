#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace vcdim {

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// The rank-th k-subset of {0..n-1} in lexicographic order, ascending.
std::vector<std::size_t> unrank_subset(std::size_t n, std::size_t k, std::uint64_t rank);

// Advances an ascending k-subset of {0..n-1} to its lexicographic successor.
// Returns false (leaving `idx` unchanged) at the last subset.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n);

} // namespace vcdim
