#include "orlicz/two_concavity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace orlicz {

TwoConcavityReport is_two_concave(const OrliczFunction& m,
                                  const TwoConcavityGrid& grid) {
  if (grid.points < 3 || !(grid.lo > 0.0) || !(grid.hi > grid.lo))
    throw std::invalid_argument("is_two_concave: need >= 3 points on 0 < lo < hi");
  double hi = grid.hi;
  if (const auto bound = m.domain_bound()) hi = std::min(hi, (*bound) * (*bound));
  if (!(hi > grid.lo))
    throw std::invalid_argument("is_two_concave: grid lies outside the domain");

  std::vector<double> t(grid.points);
  const double step = std::log(hi / grid.lo) / static_cast<double>(grid.points - 1);
  for (std::size_t k = 0; k < grid.points; ++k)
    t[k] = grid.lo * std::exp(step * static_cast<double>(k));
  t.back() = hi;

  std::vector<double> g(grid.points);
  for (std::size_t k = 0; k < grid.points; ++k) g[k] = m(std::sqrt(t[k]));

  TwoConcavityReport report;
  report.points = grid.points;
  report.worst_margin = -std::numeric_limits<double>::infinity();
  double prev = (g[1] - g[0]) / (t[1] - t[0]);
  for (std::size_t k = 2; k < grid.points; ++k) {
    const double s = (g[k] - g[k - 1]) / (t[k] - t[k - 1]);
    const double scale = std::max({std::abs(s), std::abs(prev),
                                   std::numeric_limits<double>::min()});
    report.worst_margin = std::max(report.worst_margin, (s - prev) / scale);
    prev = s;
  }
  report.concave = report.worst_margin <= grid.slack;
  report.strictly_concave = report.worst_margin < -grid.slack;
  return report;
}

}  // namespace orlicz
