#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "orlicz/piecewise_affine.hpp"
#include "orlicz/sampler.hpp"

namespace orlicz::testing {

/// Random convex PWA function with `segments` pieces and an extension slope.
inline PiecewiseAffine random_pwa(CounterRng& rng, std::size_t segments) {
  std::vector<double> knots{0.0};
  std::vector<double> values{0.0};
  double slope = 0.05 + rng.uniform();
  for (std::size_t k = 0; k < segments; ++k) {
    const double width = 0.1 + rng.uniform();
    knots.push_back(knots.back() + width);
    values.push_back(values.back() + slope * width);
    slope += 0.05 + rng.uniform();
  }
  return PiecewiseAffine::with_extension(knots, values, slope);
}

/// sup_{0 <= t <= hi} (x t - f(t)) by a grid scan refined with ternary search.
template <class F>
double sup_oracle(const F& f, double x, double hi, int grid = 4000) {
  auto g = [&](double t) { return x * t - f(t); };
  int best = 0;
  double best_value = g(0.0);
  for (int k = 1; k <= grid; ++k) {
    const double v = g(hi * k / grid);
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }
  double lo = hi * std::max(best - 1, 0) / grid;
  double up = hi * std::min(best + 1, grid) / grid;
  for (int it = 0; it < 200; ++it) {
    const double a = lo + (up - lo) / 3.0;
    const double b = up - (up - lo) / 3.0;
    if (g(a) < g(b))
      lo = a;
    else
      up = b;
  }
  return std::max(best_value, g(0.5 * (lo + up)));
}

}  // namespace orlicz::testing
