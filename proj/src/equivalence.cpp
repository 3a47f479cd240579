#include "orlicz/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orlicz/errors.hpp"

namespace orlicz {

EquivalenceReport EquivalenceReport::swapped() const {
  std::vector<double> inv(ratios.size());
  std::transform(ratios.begin(), ratios.end(), inv.begin(),
                 [](double r) { return 1.0 / r; });
  return report_from_ratios(std::move(inv), descriptor + " (swapped)");
}

EquivalenceReport report_from_ratios(std::vector<double> ratios, std::string descriptor) {
  if (ratios.empty()) throw std::invalid_argument("equivalence report: no ratios");
  for (double r : ratios) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw std::invalid_argument("equivalence report: ratios must be positive and finite");
  }
  EquivalenceReport report;
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  report.c_low = *lo;
  report.c_high = *hi;
  report.ratios = std::move(ratios);
  report.descriptor = std::move(descriptor);
  return report;
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  if (points < 2 || !(lo > 0.0) || !(hi > lo))
    throw std::invalid_argument("log_grid: need >= 2 points on 0 < lo < hi");
  std::vector<double> grid(points);
  const double step = std::log(hi / lo) / static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k)
    grid[k] = lo * std::exp(step * static_cast<double>(k));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

EquivalenceReport equivalence_constants(const MusielakSystem& a,
                                        const MusielakSystem& b,
                                        std::span<const double> grid) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("equivalence_constants: dimensions differ");
  std::vector<double> ratios;
  ratios.reserve(a.dimension() * grid.size());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (double t : grid) {
      if (!(t > 0.0)) throw std::invalid_argument("equivalence_constants: grid must be positive");
      const double num = a[i].inverse(t);
      const double den = b[i].inverse(t);
      if (!(den > 0.0) || !(num > 0.0))
        throw ConstructionError("equivalence_constants: vanishing inverse at t > 0", i);
      ratios.push_back(num / den);
    }
  }
  return report_from_ratios(std::move(ratios), "inverse ratios over " +
                                                   std::to_string(grid.size()) +
                                                   " grid points");
}

}  // namespace orlicz
