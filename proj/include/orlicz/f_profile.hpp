#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "orlicz/orlicz_function.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {

struct ConstructionConfig {
  std::size_t n = 1;
  double tolerance = 1e-9;
  unsigned max_depth = 15;
  /// Relative step of the finite-difference derivative backend.
  double fd_step = 1e-5;
  /// Below this point integrals of f use a fitted d + c t^gamma tail;
  /// 0 selects 1e-6 / n.
  double t_min = 0.0;

  double cutoff() const { return t_min > 0.0 ? t_min : 1e-6 / static_cast<double>(n); }
  QuadratureOptions quadrature() const { return {tolerance, max_depth}; }
  /// Throws std::invalid_argument unless tolerance > 0 and 0 < t_min < 1/n.
  void validate() const;
};

/// H = (M*^{-1})^2 with its first two derivatives, either analytic or by
/// central differences with one Richardson step.
class HFunction {
 public:
  using Fn = std::function<double(double)>;

  static HFunction analytic(Fn value, Fn first, Fn second, std::string name);
  static HFunction numeric(Fn value, double relative_step, std::string name);
  /// scale * t^alpha.
  static HFunction power(double scale, double alpha);
  /// H(t) = t, the degenerate limit M*(t) = t^2.
  static HFunction identity();
  /// H = (M*^{-1})^2; analytic for the power family.
  static HFunction from_orlicz(const OrliczFunction& m, double relative_step = 1e-5);

  double value(double t) const { return value_(t); }
  double first(double t) const;
  double second(double t) const;
  bool is_analytic() const { return static_cast<bool>(first_); }
  const std::string& name() const { return name_; }

 private:
  Fn value_;
  Fn first_;
  Fn second_;
  double step_ = 1e-5;
  std::string name_;
};

/// f(t) = sqrt(H(1)) - sqrt(H(1) - H'(1)) - 1/2 Int_t^1 H''(s) / sqrt(H(s) - s H'(s)) ds.
///
/// Nonnegative and nonincreasing on (0, 1] for concave increasing H, and
/// H(t) = (Int_0^t f)^2 + t Int_t^1 f^2.
class FProfile {
 public:
  FProfile(HFunction h, const ConstructionConfig& config);

  /// t in (0, 1]. Throws ConstructionError on violated hypotheses.
  double operator()(double t) const;
  double boundary_term() const { return f_one_; }

  /// Int_u^v f, 0 <= u <= v <= 1.
  Quadrature integral(double u, double v) const;
  /// Int_u^v f^2, 0 <= u <= v <= 1; throws when divergent at 0.
  Quadrature square_integral(double u, double v) const;

  const HFunction& h() const { return h_; }

 private:
  double integrand(double s) const;
  /// Int_t^1 of the integrand.
  double curvature_integral(double t) const;
  /// Adaptive integral of `g` over [u, v], v <= 1, split at the cells.
  Quadrature integrate_cells(const std::function<double(double)>& g, double u, double v) const;

  struct Tail {
    double offset = 0.0;     // d
    double amplitude = 0.0;  // c
    double exponent = 0.0;   // gamma
  };
  Tail fit_tail() const;
  double tail_integral(double u, double v) const;
  double tail_square_integral(double u, double v) const;

  HFunction h_;
  ConstructionConfig config_;
  double f_one_ = 0.0;
  // Dyadic cells from t_min up to 1/32, uniform cells of width 1/32 above;
  // the curvature integral is cached at every cell boundary.
  std::vector<double> cells_;
  std::vector<double> cell_integral_;
  Tail tail_;
};

/// Convenience: f(t) for a single point.
double f_profile(const HFunction& h, double t, const ConstructionConfig& config = {});

/// max over `grid` of |H(t) - ((Int_0^t f)^2 + t Int_t^1 f^2)|.
double h_reconstruct_check(const HFunction& h, const FProfile& f, std::span<const double> grid);

}  // namespace orlicz
