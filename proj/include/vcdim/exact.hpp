#pragma once

// Exact VC dimension of a finite class given as a concept matrix, by
// enumerating column subsets (the discrete brute force). Ground truth for
// validating the randomized estimator.

#include "vcdim/concept_matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace vcdim {

struct ExactOptions {
    std::size_t workers = 1;
};

// Largest d such that some d-subset of columns is shattered; 0 when no single
// column takes both values.
std::size_t exact_vcdim_matrix(const ConceptMatrix& matrix, const ExactOptions& options = {});

// Lexicographically first shattered d-subset of columns, if any.
std::optional<std::vector<std::size_t>> exact_shattered_witness(const ConceptMatrix& matrix, std::size_t d,
                                                                const ExactOptions& options = {});

} // namespace vcdim
