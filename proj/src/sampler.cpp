#include "orlicz/sampler.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace orlicz {
namespace {

__extension__ using Wide = unsigned __int128;

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t CounterRng::derive(std::uint64_t seed, std::uint64_t stream) {
  if (stream == 0) return seed;
  return mix(seed ^ mix(stream * kGamma + 0x632BE59BD9B4E019ULL));
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(derive(seed, stream)) {}

CounterRng::result_type CounterRng::operator()() {
  ++counter_;
  return mix(key_ + counter_ * kGamma);
}

std::uint64_t CounterRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("CounterRng::below: zero bound");
  Wide m = static_cast<Wide>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<Wide>((*this)()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double CounterRng::uniform() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double CounterRng::normal() {
  // 1 - u keeps the log argument in (0, 1]
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

void PermutationSampler::draw(std::span<std::size_t> perm) {
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = perm.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng_.below(i));
    std::swap(perm[i - 1], perm[j]);
  }
}

std::vector<std::size_t> PermutationSampler::draw(std::size_t n) {
  std::vector<std::size_t> perm(n);
  draw(std::span<std::size_t>(perm));
  return perm;
}

void PermutationSampler::draw_signs(std::span<double> signs) {
  std::uint64_t bits = 0;
  int left = 0;
  for (double& s : signs) {
    if (left == 0) {
      bits = rng_();
      left = 64;
    }
    s = (bits & 1U) ? 1.0 : -1.0;
    bits >>= 1;
    --left;
  }
}

}  // namespace orlicz
