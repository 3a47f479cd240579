#pragma once

#include <functional>

namespace orlicz {

struct QuadratureOptions {
  /// Relative to the L1 norm of the integrand on each piece.
  double tolerance = 1e-9;
  unsigned max_depth = 15;
};

struct Quadrature {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive 15-point Gauss-Kronrod on [a, b].
Quadrature integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureOptions& options = {});

/// Fixed 30-point Gauss-Legendre rule on [a, b]; no adaptivity, so the
/// result is a smooth function of the end points.
double integrate_fixed(const std::function<double(double)>& f, double a, double b);

/// Adaptive rule, after splitting [a, b] into dyadic pieces [a, 2a], [2a, 4a], ...
/// so integrands that blow up like a power of t near 0 are resolved on every
/// scale. Requires 0 < a <= b.
Quadrature integrate_graded(const std::function<double(double)>& f, double a, double b,
                            const QuadratureOptions& options = {});

}  // namespace orlicz
