#pragma once

#include <cstddef>

#include "orlicz/orlicz_function.hpp"

namespace orlicz {

/// Log-spaced grid on which t -> M(sqrt(t)) is examined.
struct TwoConcavityGrid {
  std::size_t points = 2048;
  double lo = 1e-6;
  double hi = 1e3;
  /// Normalized second differences within this margin of zero count as zero.
  double slack = 1e-8;
};

struct TwoConcavityReport {
  bool concave = false;         // every normalized second difference <= slack
  bool strictly_concave = false;  // every one < -slack
  /// Largest normalized second difference seen; positive means a violation.
  double worst_margin = 0.0;
  std::size_t points = 0;
};

/// Second-difference certificate for concavity of M o sqrt. Differences are
/// normalized by the adjacent slopes so the margin is scale free.
TwoConcavityReport is_two_concave(const OrliczFunction& m,
                                  const TwoConcavityGrid& grid = {});

}  // namespace orlicz
