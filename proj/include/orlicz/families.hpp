#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "orlicz/musielak.hpp"
#include "orlicz/sampler.hpp"
#include "orlicz/weight_matrix.hpp"

namespace orlicz {

/// Square matrix with first entries uniform in [0.5, 3] and each next entry
/// the previous one times a factor uniform in [0.2, 1].
WeightMatrix random_decreasing_matrix(CounterRng& rng, std::size_t n);

/// n x cols matrix, same law as above.
WeightMatrix random_decreasing_matrix(CounterRng& rng, std::size_t n, std::size_t cols);

/// Entries uniform in [-1, 1].
Array3 random_array3(CounterRng& rng, std::size_t n);

std::vector<double> gaussian_vector(CounterRng& rng, std::size_t n);

/// Normalized power functions, member i with exponent exponents[i % size].
MusielakSystem power_system(std::size_t n, std::span<const double> exponents);

}  // namespace orlicz
