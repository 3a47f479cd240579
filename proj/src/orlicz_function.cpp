#include "orlicz/orlicz_function.hpp"

#include <cmath>
#include <stdexcept>

#include "orlicz/errors.hpp"

namespace orlicz {

OrliczFunction::OrliczFunction(Representation rep) : rep_(std::move(rep)) {
  if (const auto* p = as_power()) {
    traits_.strictly_convex = true;
    traits_.twice_differentiable = true;
    traits_.strictly_two_concave = p->exponent < 2.0;
  }
}

OrliczFunction OrliczFunction::power(double exponent, double scale) {
  if (!(exponent > 1.0) || !std::isfinite(exponent))
    throw ConstructionError("power Orlicz function needs exponent > 1");
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw ConstructionError("power Orlicz function needs a positive scale");
  return OrliczFunction(PowerFamily{exponent, scale});
}

OrliczFunction OrliczFunction::piecewise(PiecewiseAffine f) {
  return OrliczFunction(std::move(f));
}

double OrliczFunction::eval(double t) const {
  if (!(t >= 0.0)) throw std::invalid_argument("Orlicz function: negative argument");
  if (const auto* p = as_power()) {
    if (t == 0.0) return 0.0;
    return p->scale * std::pow(t, p->exponent);
  }
  return std::get<PiecewiseAffine>(rep_)(t);
}

double OrliczFunction::inverse(double y) const {
  if (!(y >= 0.0)) throw std::invalid_argument("Orlicz function: negative inverse argument");
  if (const auto* p = as_power()) {
    if (y == 0.0) return 0.0;
    return std::pow(y / p->scale, 1.0 / p->exponent);
  }
  return std::get<PiecewiseAffine>(rep_).inverse(y);
}

OrliczFunction OrliczFunction::conjugate() const {
  if (const auto* p = as_power()) {
    // sup_t (y t - c t^p) = (1/q) (c p)^{1-q} y^q
    const double q = p->conjugate_exponent();
    const double c = std::pow(p->scale * p->exponent, 1.0 - q) / q;
    return power(q, c);
  }
  return piecewise(std::get<PiecewiseAffine>(rep_).conjugate());
}

OrliczFunction OrliczFunction::rescaled_argument(double lambda) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("Orlicz function: rescale factor must be positive");
  if (const auto* p = as_power())
    return power(p->exponent, p->scale * std::pow(lambda, p->exponent));
  return piecewise(std::get<PiecewiseAffine>(rep_).rescaled_argument(lambda));
}

bool OrliczFunction::in_domain(double t) const {
  if (as_power()) return t >= 0.0;
  return std::get<PiecewiseAffine>(rep_).in_domain(t);
}

std::optional<double> OrliczFunction::domain_bound() const {
  if (as_power()) return std::nullopt;
  return std::get<PiecewiseAffine>(rep_).domain_bound();
}

bool OrliczFunction::positive() const {
  if (as_power()) return true;
  return std::get<PiecewiseAffine>(rep_).positive();
}

}  // namespace orlicz
