#pragma once

#include <optional>
#include <span>
#include <vector>

namespace orlicz {

/// Convex, nondecreasing, piecewise-affine function on [0, inf) with f(0) = 0.
///
/// The function is given by its values at strictly increasing knots
/// 0 = t_0 < t_1 < ... < t_m and is affine in between. Past the last knot it
/// either continues with a fixed extension slope, or it is +inf (the domain
/// is bounded by t_m). The second form is what the Legendre transform of a
/// function with linear growth produces.
class PiecewiseAffine {
 public:
  static PiecewiseAffine with_extension(std::vector<double> knots,
                                        std::vector<double> values,
                                        double ext_slope);
  static PiecewiseAffine with_domain_bound(std::vector<double> knots,
                                           std::vector<double> values);

  /// Throws std::invalid_argument for t < 0 and std::domain_error past the
  /// domain bound.
  double operator()(double t) const;

  bool in_domain(double t) const;
  std::optional<double> domain_bound() const;

  /// Smallest t with f(t) >= y. Past the range of a bounded-domain function
  /// this is the domain bound, where f jumps to +inf.
  double inverse(double y) const;

  /// sup_{t >= 0} (x t - f(t)); exact, the knots of the result are the
  /// segment slopes of this function.
  PiecewiseAffine conjugate() const;

  /// f(lambda * t).
  PiecewiseAffine rescaled_argument(double lambda) const;

  std::span<const double> knots() const { return knots_; }
  std::span<const double> values() const { return values_; }
  std::size_t segments() const { return knots_.size() - 1; }
  /// Slope of segment k, k in [0, segments()).
  double slope(std::size_t k) const;
  /// Slope past the last knot; only meaningful without a domain bound.
  double ext_slope() const { return ext_slope_; }
  bool bounded() const { return bounded_; }
  /// Strictly positive away from zero.
  bool positive() const { return values_[1] > 0.0; }

 private:
  PiecewiseAffine(std::vector<double> knots, std::vector<double> values,
                  double ext_slope, bool bounded);
  void validate() const;

  std::vector<double> knots_;
  std::vector<double> values_;
  double ext_slope_ = 0.0;
  bool bounded_ = false;
};

}  // namespace orlicz
