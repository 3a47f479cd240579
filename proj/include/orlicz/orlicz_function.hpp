#pragma once

#include <optional>
#include <variant>

#include "orlicz/piecewise_affine.hpp"

namespace orlicz {

/// M(t) = scale * t^exponent, exponent > 1.
struct PowerFamily {
  double exponent = 2.0;
  double scale = 1.0;

  /// Exponent q of the conjugate, 1/p + 1/q = 1.
  double conjugate_exponent() const { return exponent / (exponent - 1.0); }
};

/// Regularity flags. Analytic for the power family; all false for
/// piecewise-affine functions.
struct OrliczTraits {
  bool strictly_convex = false;
  bool twice_differentiable = false;
  bool strictly_two_concave = false;
};

/// A convex nondecreasing function M on [0, inf) with M(0) = 0, not
/// identically zero.
///
/// Piecewise-affine members may vanish on an initial interval and may be
/// +inf past a domain bound; both arise as Legendre transforms of
/// piecewise-affine functions and both are handled by the Luxemburg solver.
/// `positive()` reports whether M(t) > 0 for every t > 0.
class OrliczFunction {
 public:
  using Representation = std::variant<PowerFamily, PiecewiseAffine>;

  static OrliczFunction power(double exponent, double scale = 1.0);
  static OrliczFunction piecewise(PiecewiseAffine f);

  double eval(double t) const;
  double operator()(double t) const { return eval(t); }
  double inverse(double y) const;
  OrliczFunction conjugate() const;
  /// t -> M(lambda * t).
  OrliczFunction rescaled_argument(double lambda) const;

  bool in_domain(double t) const;
  std::optional<double> domain_bound() const;
  bool positive() const;

  const Representation& representation() const { return rep_; }
  const PowerFamily* as_power() const { return std::get_if<PowerFamily>(&rep_); }
  const PiecewiseAffine* as_piecewise() const {
    return std::get_if<PiecewiseAffine>(&rep_);
  }
  const OrliczTraits& traits() const { return traits_; }

 private:
  explicit OrliczFunction(Representation rep);

  Representation rep_;
  OrliczTraits traits_;
};

}  // namespace orlicz
