#include "orlicz/averages.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "orlicz/accumulate.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/sampler.hpp"

namespace orlicz {
namespace {

void check_exact(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit)
    throw ExactModeLimit(std::string(what) + ": exact mode is limited to n <= " +
                         std::to_string(limit) + ", got n = " + std::to_string(n));
}

void check_samples(const SamplingOptions& options) {
  if (options.samples < 2)
    throw std::invalid_argument("Monte-Carlo averages need at least two samples");
}

template <class Term>
AverageResult average_single(std::size_t n, AverageMode mode, const SamplingOptions& options,
                             const char* what, Term&& term) {
  AverageResult result;
  result.mode = mode;
  if (mode == AverageMode::exact) {
    check_exact(n, kExactSingleLimit, what);
    CompensatedSum sum;
    std::size_t count = 0;
    for_each_permutation(n, [&](std::span<const std::size_t> perm) {
      sum += term(perm);
      ++count;
    });
    result.value = sum.value() / static_cast<double>(count);
    result.samples = count;
    return result;
  }
  check_samples(options);
  PermutationSampler sampler(options.seed);
  std::vector<std::size_t> perm(n);
  RunningStats stats;
  for (std::size_t s = 0; s < options.samples; ++s) {
    sampler.draw(std::span<std::size_t>(perm));
    stats.add(term(std::span<const std::size_t>(perm)));
  }
  result.value = stats.mean();
  result.samples = stats.count();
  result.standard_error = stats.standard_error();
  return result;
}

}  // namespace

std::string_view to_string(AverageMode mode) {
  return mode == AverageMode::exact ? "exact" : "monte-carlo";
}

AverageMode average_mode_from_string(std::string_view name) {
  if (name == "exact") return AverageMode::exact;
  if (name == "monte-carlo") return AverageMode::monte_carlo;
  throw std::invalid_argument("unknown average mode '" + std::string(name) + "'");
}

void for_each_permutation(std::size_t n,
                          const std::function<void(std::span<const std::size_t>)>& visit) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    visit(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<double> dra(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("dra: empty input");
  std::vector<double> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(),
                 [](double v) { return std::abs(v); });
  std::stable_sort(out.begin(), out.end(), std::greater<>());
  return out;
}

AverageResult ave_l2(const WeightMatrix& a, std::span<const double> x, AverageMode mode,
                     const SamplingOptions& options) {
  if (!a.square()) throw std::invalid_argument("ave_l2: matrix must be square");
  if (x.size() != a.rows()) throw std::invalid_argument("ave_l2: vector length mismatch");
  const std::size_t n = x.size();
  return average_single(n, mode, options, "ave_l2", [&](std::span<const std::size_t> pi) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = x[i] * a(i, pi[i]);
      s += v * v;
    }
    return std::sqrt(s);
  });
}

AverageResult ave_max_two(const Array3& a, AverageMode mode, const SamplingOptions& options) {
  const std::size_t n = a.size();
  auto term = [&](std::span<const std::size_t> pi, std::span<const std::size_t> sigma) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a(i, pi[i], sigma[i])));
    return m;
  };
  AverageResult result;
  result.mode = mode;
  if (mode == AverageMode::exact) {
    check_exact(n, kExactPairLimit, "ave_max_two");
    std::vector<std::vector<std::size_t>> perms;
    for_each_permutation(n, [&](std::span<const std::size_t> p) {
      perms.emplace_back(p.begin(), p.end());
    });
    CompensatedSum sum;
    for (const auto& pi : perms)
      for (const auto& sigma : perms) sum += term(pi, sigma);
    const std::size_t count = perms.size() * perms.size();
    result.value = sum.value() / static_cast<double>(count);
    result.samples = count;
    return result;
  }
  check_samples(options);
  PermutationSampler sampler(options.seed);
  std::vector<std::size_t> pi(n);
  std::vector<std::size_t> sigma(n);
  RunningStats stats;
  for (std::size_t s = 0; s < options.samples; ++s) {
    sampler.draw(std::span<std::size_t>(pi));
    sampler.draw(std::span<std::size_t>(sigma));
    stats.add(term(pi, sigma));
  }
  result.value = stats.mean();
  result.samples = stats.count();
  result.standard_error = stats.standard_error();
  return result;
}

double dra_sum_bound(const Array3& a) {
  const std::size_t n = a.size();
  const std::vector<double> sorted = dra(a.entries());
  CompensatedSum sum;
  for (std::size_t k = 0; k < n * n; ++k) sum += sorted[k];
  return sum.value() / static_cast<double>(n * n);
}

std::vector<double> build_b_vector(std::size_t n) {
  if (n == 0) throw std::invalid_argument("build_b_vector: n must be positive");
  std::vector<double> b(n);
  for (std::size_t k = 1; k <= n; ++k)
    b[k - 1] = std::sqrt(static_cast<double>(n) / static_cast<double>(k));
  return b;
}

AverageResult ave_max_vector(std::span<const double> b, std::span<const double> y,
                             AverageMode mode, const SamplingOptions& options) {
  if (b.size() != y.size()) throw std::invalid_argument("ave_max_vector: length mismatch");
  if (b.empty()) throw std::invalid_argument("ave_max_vector: empty input");
  const std::size_t n = y.size();
  return average_single(n, mode, options, "ave_max_vector",
                        [&](std::span<const std::size_t> sigma) {
                          double m = 0.0;
                          for (std::size_t k = 0; k < n; ++k)
                            m = std::max(m, std::abs(y[k] * b[sigma[k]]));
                          return m;
                        });
}

}  // namespace orlicz
