#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace orlicz {

/// Counter-based generator: the k-th output is the SplitMix64 finalizer
/// applied to key + k * 0x9E3779B97F4A7C15, so a (seed, stream) pair fixes
/// the whole sequence on every platform.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();
  /// Uniform on {0, ..., bound - 1} (Lemire's multiply-and-reject).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal by Box-Muller; consumes two outputs.
  double normal();

  std::uint64_t counter() const { return counter_; }

  /// Key of an independent sub-stream, e.g. one per instance or chunk.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Uniform random permutations of {0, ..., n-1} by Fisher-Yates.
class PermutationSampler {
 public:
  explicit PermutationSampler(std::uint64_t seed, std::uint64_t stream = 0)
      : rng_(seed, stream) {}

  /// Overwrites `perm` with a fresh uniform permutation.
  void draw(std::span<std::size_t> perm);
  std::vector<std::size_t> draw(std::size_t n);
  /// Uniform sign vector in {-1, +1}^n.
  void draw_signs(std::span<double> signs);

  CounterRng& rng() { return rng_; }

 private:
  CounterRng rng_;
};

}  // namespace orlicz
