#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "orlicz/musielak.hpp"

namespace orlicz {

/// Empirical two-sided constants c_low <= ratio <= c_high.
struct EquivalenceReport {
  double c_low = 0.0;
  double c_high = 0.0;
  std::vector<double> ratios;
  std::string descriptor;

  std::size_t samples() const { return ratios.size(); }
  /// The report for the reciprocal ratios.
  EquivalenceReport swapped() const;
};

/// Builds a report from raw ratios; all must be positive and finite.
EquivalenceReport report_from_ratios(std::vector<double> ratios, std::string descriptor);

/// log-spaced evaluation points in [lo, hi].
std::vector<double> log_grid(double lo, double hi, std::size_t points);

/// Ratios A_i^{-1}(t) / B_i^{-1}(t) over every i and every t in `grid`.
EquivalenceReport equivalence_constants(const MusielakSystem& a,
                                        const MusielakSystem& b,
                                        std::span<const double> grid);

}  // namespace orlicz
