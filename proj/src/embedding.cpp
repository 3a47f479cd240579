#include "orlicz/embedding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "orlicz/accumulate.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/sampler.hpp"

namespace orlicz {
namespace {

// 2^{-n} Sum_eps |Sum_i eps_i c_i|
double sign_average(std::span<const double> c) {
  const std::size_t n = c.size();
  std::vector<double> eps(n, 1.0);
  double s = 0.0;
  for (double v : c) s += v;
  CompensatedSum total;
  total += std::abs(s);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(k));
    s -= 2.0 * eps[bit] * c[bit];
    eps[bit] = -eps[bit];
    total += std::abs(s);
  }
  return total.value() / static_cast<double>(count);
}

}  // namespace

AverageResult psi_image_norm(const WeightMatrix& a, std::span<const double> x, AverageMode mode,
                             const SamplingOptions& options) {
  if (!a.square()) throw std::invalid_argument("psi_image_norm: matrix must be square");
  if (x.size() != a.rows()) throw std::invalid_argument("psi_image_norm: vector length mismatch");
  const std::size_t n = x.size();
  std::vector<double> c(n);
  AverageResult result;
  result.mode = mode;
  if (mode == AverageMode::exact) {
    if (n > kExactSignedLimit)
      throw ExactModeLimit("psi_image_norm: exact mode is limited to n <= " +
                           std::to_string(kExactSignedLimit) + ", got n = " + std::to_string(n));
    CompensatedSum sum;
    std::size_t perms = 0;
    for_each_permutation(n, [&](std::span<const std::size_t> pi) {
      for (std::size_t i = 0; i < n; ++i) c[i] = x[i] * a(i, pi[i]);
      sum += sign_average(c);
      ++perms;
    });
    result.value = sum.value() / static_cast<double>(perms);
    result.samples = perms << n;
    return result;
  }
  if (options.samples < 2) throw std::invalid_argument("Monte-Carlo averages need at least two samples");
  PermutationSampler sampler(options.seed);
  std::vector<std::size_t> pi(n);
  std::vector<double> eps(n);
  RunningStats stats;
  for (std::size_t s = 0; s < options.samples; ++s) {
    sampler.draw(std::span<std::size_t>(pi));
    sampler.draw_signs(eps);
    double v = 0.0;
    for (std::size_t i = 0; i < n; ++i) v += eps[i] * x[i] * a(i, pi[i]);
    stats.add(std::abs(v));
  }
  result.value = stats.mean();
  result.samples = stats.count();
  result.standard_error = stats.standard_error();
  return result;
}

KhintchineSandwich khintchine_sandwich_check(const WeightMatrix& a, std::span<const double> x) {
  KhintchineSandwich out;
  out.ave_l2 = ave_l2(a, x, AverageMode::exact).value;
  out.psi = psi_image_norm(a, x, AverageMode::exact).value;
  const double slack = kKhintchineSlack * out.ave_l2;
  out.passed = out.ave_l2 / std::numbers::sqrt2 <= out.psi + slack && out.psi <= out.ave_l2 + slack;
  return out;
}

DistortionReport distortion_estimate(const MusielakSystem& system, const WeightMatrix& a,
                                     const DistortionOptions& options) {
  const std::size_t n = a.rows();
  if (system.dimension() != n || !a.square())
    throw std::invalid_argument("distortion_estimate: system and matrix dimensions differ");
  const AverageMode mode = n <= kExactSignedLimit ? AverageMode::exact : AverageMode::monte_carlo;

  std::vector<std::vector<double>> directions;
  if (options.include_extreme_points) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> e(n, 0.0);
      e[i] = 1.0;
      directions.push_back(std::move(e));
    }
    directions.emplace_back(n, 1.0);
  }
  CounterRng rng(options.seed, 1);
  for (std::size_t s = 0; s < options.gaussian_directions; ++s) {
    std::vector<double> g(n);
    double norm = 0.0;
    do {
      norm = 0.0;
      for (double& v : g) {
        v = rng.normal();
        norm += v * v;
      }
    } while (norm == 0.0);
    directions.push_back(std::move(g));
  }

  DistortionReport report;
  report.scheme = std::to_string(options.gaussian_directions) + " gaussian directions" +
                  (options.include_extreme_points ? " + basis vectors + all-ones" : "") +
                  ", psi " + std::string(to_string(mode));
  std::uint64_t stream = 0;
  for (auto& x : directions) {
    const double norm = luxemburg_norm(system, x);
    if (!(norm > 0.0)) throw std::invalid_argument("distortion_estimate: zero-norm direction");
    for (double& v : x) v /= norm;
    const SamplingOptions sampling{options.psi_samples, CounterRng::derive(options.seed, ++stream)};
    const double psi = psi_image_norm(a, x, mode, sampling).value;
    report.ratios.push_back(psi / luxemburg_norm(system, x));
  }
  const auto [lo, hi] = std::minmax_element(report.ratios.begin(), report.ratios.end());
  report.ratio_min = *lo;
  report.ratio_max = *hi;
  report.distortion = report.ratio_max / report.ratio_min;
  return report;
}

}  // namespace orlicz
