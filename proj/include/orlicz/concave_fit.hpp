#pragma once

#include <span>
#include <vector>

#include "orlicz/f_profile.hpp"

namespace orlicz {

/// H(t) = Sum_k w_k t^{alpha_k}, w_k >= 0, alpha_k in (0, 1]. Every such H is
/// smooth, increasing and concave with H(0) = 0; strictly concave as soon as
/// some weight sits on alpha_k < 1.
struct ConcaveFit {
  std::vector<double> exponents;
  std::vector<double> weights;
  /// Largest |H(t_l) / H_l - 1| over the fitted points.
  double max_relative_residual = 0.0;

  HFunction h() const;
};

/// Default dictionary: alpha = 1.0, 0.9, ..., 0.1.
std::vector<double> default_fit_exponents();

/// Nonnegative least squares fit of relative residuals at (t_l, H_l), with a
/// small ridge that grows as alpha falls so exactly linear data maps to H = t.
/// The result is rescaled so H(1) = 1.
ConcaveFit fit_concave_power_mixture(std::span<const double> t, std::span<const double> values,
                                     std::span<const double> exponents = {});

}  // namespace orlicz
