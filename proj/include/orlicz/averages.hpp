#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "orlicz/weight_matrix.hpp"

namespace orlicz {

/// Largest n for exact averages over one permutation (8! = 40320 terms).
inline constexpr std::size_t kExactSingleLimit = 8;
/// Largest n for exact averages over pairs of permutations ((5!)^2 terms).
inline constexpr std::size_t kExactPairLimit = 5;
inline constexpr std::size_t kDefaultSamples = 100000;

enum class AverageMode { exact, monte_carlo };

std::string_view to_string(AverageMode mode);
AverageMode average_mode_from_string(std::string_view name);

struct SamplingOptions {
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = 0;
};

/// Value of a permutation average. `standard_error` is zero in exact mode
/// and sd / sqrt(samples) in Monte-Carlo mode.
struct AverageResult {
  double value = 0.0;
  AverageMode mode = AverageMode::exact;
  std::size_t samples = 0;
  double standard_error = 0.0;
};

/// Calls `visit` with every permutation of {0..n-1} in lexicographic order.
void for_each_permutation(std::size_t n,
                          const std::function<void(std::span<const std::size_t>)>& visit);

/// Absolute values sorted nonincreasingly; ties keep their input order.
std::vector<double> dra(std::span<const double> values);

/// Ave_pi (Sum_i |x_i a(i, pi(i))|^2)^{1/2} for square a.
AverageResult ave_l2(const WeightMatrix& a, std::span<const double> x, AverageMode mode,
                     const SamplingOptions& options = {});

/// Ave_{pi, sigma} max_i |a(i, pi(i), sigma(i))|.
AverageResult ave_max_two(const Array3& a, AverageMode mode,
                          const SamplingOptions& options = {});

/// (1/n^2) times the sum of the n^2 largest of the n^3 values |a(i, j, k)|.
double dra_sum_bound(const Array3& a);

/// b_k = sqrt(n / k), k = 1..n.
std::vector<double> build_b_vector(std::size_t n);

/// Ave_sigma max_k |y_k b_{sigma(k)}|.
AverageResult ave_max_vector(std::span<const double> b, std::span<const double> y,
                             AverageMode mode, const SamplingOptions& options = {});

}  // namespace orlicz
