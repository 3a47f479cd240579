#include "orlicz/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>

namespace orlicz {

Quadrature integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureOptions& options) {
  if (!(a <= b)) throw std::invalid_argument("integrate: reversed interval");
  if (a == b) return {};
  // Map to [-1, 1] ourselves: the library's error estimate is not scaled
  // with the interval length, which stalls it on very short intervals.
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto mapped = [&](double x) { return half * f(mid + half * x); };
  Quadrature out;
  out.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      mapped, -1.0, 1.0, options.max_depth, options.tolerance, &out.error);
  return out;
}

double integrate_fixed(const std::function<double(double)>& f, double a, double b) {
  if (!(a <= b)) throw std::invalid_argument("integrate_fixed: reversed interval");
  if (a == b) return 0.0;
  return boost::math::quadrature::gauss<double, 30>::integrate(f, a, b);
}

Quadrature integrate_graded(const std::function<double(double)>& f, double a, double b,
                            const QuadratureOptions& options) {
  if (!(a > 0.0) || !(a <= b)) throw std::invalid_argument("integrate_graded: need 0 < a <= b");
  Quadrature out;
  double lo = a;
  while (lo < b) {
    const double hi = 2.0 * lo < b ? 2.0 * lo : b;
    const Quadrature piece = integrate(f, lo, hi, options);
    out.value += piece.value;
    out.error += piece.error;
    lo = hi;
  }
  return out;
}

}  // namespace orlicz
