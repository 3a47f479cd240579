#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orlicz/averages.hpp"
#include "orlicz/musielak.hpp"
#include "orlicz/weight_matrix.hpp"

namespace orlicz {

/// Largest n for exact evaluation of the image norm (2^6 * 6! = 46080 terms).
inline constexpr std::size_t kExactSignedLimit = 6;

/// ||Psi_n(x)|| = 2^{-n} (n!)^{-1} Sum_{eps, pi} |Sum_i x_i eps_i a(i, pi(i))|,
/// the normalized L1 norm of the image of x. The exact sign sum walks a Gray
/// code so each term costs one update.
AverageResult psi_image_norm(const WeightMatrix& a, std::span<const double> x, AverageMode mode,
                             const SamplingOptions& options = {});

struct KhintchineSandwich {
  double ave_l2 = 0.0;
  double psi = 0.0;
  bool passed = false;  // ave_l2 / sqrt(2) <= psi <= ave_l2
};

/// Relative rounding slack on both sides of the sandwich.
inline constexpr double kKhintchineSlack = 1e-12;

KhintchineSandwich khintchine_sandwich_check(const WeightMatrix& a, std::span<const double> x);

struct DistortionOptions {
  std::size_t gaussian_directions = 2000;
  bool include_extreme_points = true;  // basis vectors and the all-ones vector
  std::uint64_t seed = 0;
  /// Used only when n exceeds the exact limit.
  std::size_t psi_samples = kDefaultSamples;
};

/// Empirical witness for the distance between l^n_{Sum M_i} and the image of
/// Psi_n: the spread of ||Psi_n x|| / ||x||_{Sum M_i} over sampled directions.
/// An upper bound for this particular embedding, not the Banach-Mazur distance.
struct DistortionReport {
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  double distortion = 1.0;  // ratio_max / ratio_min
  std::vector<double> ratios;
  std::string scheme;

  std::size_t samples() const { return ratios.size(); }
};

DistortionReport distortion_estimate(const MusielakSystem& system, const WeightMatrix& a,
                                     const DistortionOptions& options = {});

}  // namespace orlicz
