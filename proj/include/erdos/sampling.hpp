#pragma once

#include <random>

#include "erdos/matrix.hpp"
#include "erdos/permutation.hpp"

namespace erdos {

Permutation random_permutation(std::size_t n, std::mt19937_64& rng);

/// Random convex combination of `terms` uniformly drawn permutation matrices
/// (repeats allowed) with weights u_k / sum u, u_k uniform on
/// [1, max_weight]. `terms == 0` draws the term count from [1, n^2].
BistochasticMatrix random_bistochastic(std::size_t n, std::mt19937_64& rng, int terms = 0, int max_weight = 20);

}  // namespace erdos
