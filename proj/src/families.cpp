#include "orlicz/families.hpp"

#include <stdexcept>

#include "orlicz/constructions.hpp"

namespace orlicz {

WeightMatrix random_decreasing_matrix(CounterRng& rng, std::size_t n) {
  return random_decreasing_matrix(rng, n, n);
}

WeightMatrix random_decreasing_matrix(CounterRng& rng, std::size_t n, std::size_t cols) {
  std::vector<double> entries;
  entries.reserve(n * cols);
  for (std::size_t i = 0; i < n; ++i) {
    double v = 0.5 + 2.5 * rng.uniform();
    for (std::size_t j = 0; j < cols; ++j) {
      entries.push_back(v);
      v *= 0.2 + 0.8 * rng.uniform();
    }
  }
  return WeightMatrix(n, cols, std::move(entries));
}

Array3 random_array3(CounterRng& rng, std::size_t n) {
  std::vector<double> entries(n * n * n);
  for (double& v : entries) v = 2.0 * rng.uniform() - 1.0;
  return Array3(n, std::move(entries));
}

std::vector<double> gaussian_vector(CounterRng& rng, std::size_t n) {
  std::vector<double> x(n);
  for (double& v : x) v = rng.normal();
  return x;
}

MusielakSystem power_system(std::size_t n, std::span<const double> exponents) {
  if (n == 0 || exponents.empty()) throw std::invalid_argument("power_system: empty family");
  std::vector<OrliczFunction> fs;
  fs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) fs.push_back(power_orlicz(exponents[i % exponents.size()]));
  return MusielakSystem(std::move(fs));
}

}  // namespace orlicz
