#include "orlicz/f_profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "orlicz/errors.hpp"

namespace orlicz {

void ConstructionConfig::validate() const {
  if (n == 0) throw std::invalid_argument("construction config: n must be positive");
  if (!(tolerance > 0.0)) throw std::invalid_argument("construction config: tolerance must be positive");
  if (!(fd_step > 0.0 && fd_step < 0.5))
    throw std::invalid_argument("construction config: fd_step must lie in (0, 0.5)");
  const double cut = cutoff();
  if (!(cut > 0.0 && cut < 1.0 / static_cast<double>(n)))
    throw std::invalid_argument("construction config: need 0 < t_min < 1/n");
}

HFunction HFunction::analytic(Fn value, Fn first, Fn second, std::string name) {
  HFunction h;
  h.value_ = std::move(value);
  h.first_ = std::move(first);
  h.second_ = std::move(second);
  h.name_ = std::move(name);
  return h;
}

HFunction HFunction::numeric(Fn value, double relative_step, std::string name) {
  if (!(relative_step > 0.0 && relative_step < 0.5))
    throw std::invalid_argument("HFunction: relative step must lie in (0, 0.5)");
  HFunction h;
  h.value_ = std::move(value);
  h.step_ = relative_step;
  h.name_ = std::move(name);
  return h;
}

HFunction HFunction::power(double scale, double alpha) {
  std::ostringstream name;
  name << scale << " * t^" << alpha;
  return analytic([=](double t) { return t == 0.0 ? 0.0 : scale * std::pow(t, alpha); },
                  [=](double t) { return scale * alpha * std::pow(t, alpha - 1.0); },
                  [=](double t) { return scale * alpha * (alpha - 1.0) * std::pow(t, alpha - 2.0); },
                  name.str());
}

HFunction HFunction::identity() {
  return analytic([](double t) { return t; }, [](double) { return 1.0; },
                  [](double) { return 0.0; }, "t");
}

HFunction HFunction::from_orlicz(const OrliczFunction& m, double relative_step) {
  const OrliczFunction conj = m.conjugate();
  if (const auto* p = conj.as_power()) {
    // M*(y) = c y^q  =>  (M*^{-1}(t))^2 = c^{-2/q} t^{2/q}
    const double alpha = 2.0 / p->exponent;
    return power(std::pow(p->scale, -alpha), alpha);
  }
  return numeric(
      [conj](double t) {
        const double v = conj.inverse(t);
        return v * v;
      },
      relative_step, "(M*^-1)^2 (numeric)");
}

double HFunction::first(double t) const {
  if (first_) return first_(t);
  auto central = [&](double h) { return (value_(t + h) - value_(t - h)) / (2.0 * h); };
  const double h = step_ * std::min(t, 1.0);
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

double HFunction::second(double t) const {
  if (second_) return second_(t);
  const double mid = value_(t);
  auto central = [&](double h) { return (value_(t + h) - 2.0 * mid + value_(t - h)) / (h * h); };
  const double h = step_ * std::min(t, 1.0);
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

FProfile::FProfile(HFunction h, const ConstructionConfig& config)
    : h_(std::move(h)), config_(config) {
  config_.validate();
  const double h1 = h_.value(1.0);
  const double d1 = h_.first(1.0);
  if (!(h1 > 0.0)) throw ConstructionError("f-profile: H(1) must be positive");
  double inner = h1 - d1;
  if (inner < -config_.tolerance * std::max(1.0, h1))
    throw ConstructionError("f-profile: H(1) - H'(1) < 0, H is not concave");
  inner = std::max(inner, 0.0);
  f_one_ = std::sqrt(h1) - std::sqrt(inner);

  const double cut = config_.cutoff();
  constexpr double kWidth = 1.0 / 32.0;
  for (double t = cut; t < kWidth; t *= 2.0) cells_.push_back(t);
  for (double t = kWidth; t < 1.0 - 0.5 * kWidth; t += kWidth)
    if (t > cells_.back()) cells_.push_back(t);
  cells_.push_back(1.0);
  cell_integral_.assign(cells_.size(), 0.0);
  auto g = [this](double s) { return integrand(s); };
  for (std::size_t k = cells_.size() - 1; k-- > 0;)
    cell_integral_[k] = cell_integral_[k + 1] + integrate_fixed(g, cells_[k], cells_[k + 1]);
  tail_ = fit_tail();
}

double FProfile::curvature_integral(double t) const {
  auto g = [this](double s) { return integrand(s); };
  if (t < cells_.front())
    return cell_integral_.front() + integrate_graded(g, t, cells_.front(), config_.quadrature()).value;
  const auto hi = std::upper_bound(cells_.begin(), cells_.end(), t);
  if (hi == cells_.end()) return 0.0;
  const auto k = static_cast<std::size_t>(hi - cells_.begin());
  return cell_integral_[k] + integrate_fixed(g, t, *hi);
}

Quadrature FProfile::integrate_cells(const std::function<double(double)>& g, double u,
                                     double v) const {
  Quadrature out;
  for (std::size_t k = 0; k + 1 < cells_.size(); ++k) {
    const double a = std::max(u, cells_[k]);
    const double b = std::min(v, cells_[k + 1]);
    if (!(a < b)) continue;
    const Quadrature piece = integrate(g, a, b, config_.quadrature());
    out.value += piece.value;
    out.error += piece.error;
  }
  return out;
}

double FProfile::integrand(double s) const {
  const double curvature = h_.second(s);
  if (curvature == 0.0) return 0.0;
  const double gap = h_.value(s) - s * h_.first(s);
  if (!(gap > 0.0)) {
    std::ostringstream msg;
    msg << "f-profile: H(s) - s H'(s) = " << gap << " <= 0 at s = " << s
        << ", concavity hypotheses violated";
    throw ConstructionError(msg.str());
  }
  return curvature / std::sqrt(gap);
}

double FProfile::operator()(double t) const {
  if (!(t > 0.0 && t <= 1.0)) throw std::invalid_argument("f-profile: t must lie in (0, 1]");
  if (t == 1.0) return f_one_;
  const double inner = curvature_integral(t);
  const double value = f_one_ - 0.5 * inner;
  const double slack = 100.0 * config_.tolerance * std::max({1.0, std::abs(f_one_), std::abs(inner)});
  if (value < -slack) {
    std::ostringstream msg;
    msg << "f-profile: f(" << t << ") = " << value << " is negative, H is not admissible";
    throw ConstructionError(msg.str());
  }
  return value;
}

FProfile::Tail FProfile::fit_tail() const {
  const double t = config_.cutoff();
  const double f1 = (*this)(t);
  Tail constant{f1, 0.0, 0.0};
  if (4.0 * t > 1.0) return constant;
  const double f2 = (*this)(2.0 * t);
  const double f4 = (*this)(4.0 * t);
  const double d1 = f1 - f2;
  const double d2 = f2 - f4;
  if (!(d1 > 1e-13 * std::abs(f1)) || !(d2 > 0.0)) return constant;
  const double r = d2 / d1;
  if (std::abs(1.0 - r) < 1e-12) return constant;
  const double gamma = std::log2(r);
  if (gamma <= -1.0)
    throw ConstructionError("f-profile: f is not integrable at 0 (fitted exponent <= -1)");
  const double amplitude = d1 / (std::pow(t, gamma) * (1.0 - r));
  return Tail{f1 - amplitude * std::pow(t, gamma), amplitude, gamma};
}

double FProfile::tail_integral(double u, double v) const {
  const auto& [d, c, g] = tail_;
  if (c == 0.0) return d * (v - u);
  return d * (v - u) + c * (std::pow(v, g + 1.0) - std::pow(u, g + 1.0)) / (g + 1.0);
}

double FProfile::tail_square_integral(double u, double v) const {
  const auto& [d, c, g] = tail_;
  if (c == 0.0) return d * d * (v - u);
  const double e = 2.0 * g + 1.0;
  double pure;
  if (e <= 0.0 && u == 0.0)
    throw ConstructionError("f-profile: f^2 is not integrable at 0");
  if (e == 0.0)
    pure = std::log(v / u);
  else
    pure = (std::pow(v, e) - std::pow(u, e)) / e;
  return d * d * (v - u) + 2.0 * d * c * (std::pow(v, g + 1.0) - std::pow(u, g + 1.0)) / (g + 1.0) +
         c * c * pure;
}

Quadrature FProfile::integral(double u, double v) const {
  if (!(u >= 0.0 && u <= v && v <= 1.0))
    throw std::invalid_argument("f-profile integral: need 0 <= u <= v <= 1");
  const double cut = config_.cutoff();
  Quadrature out;
  if (u < cut) out.value += tail_integral(u, std::min(v, cut));
  if (v > cut) {
    const Quadrature body = integrate_cells([this](double t) { return (*this)(t); },
                                            std::max(u, cut), v);
    out.value += body.value;
    out.error += body.error;
  }
  return out;
}

Quadrature FProfile::square_integral(double u, double v) const {
  if (!(u >= 0.0 && u <= v && v <= 1.0))
    throw std::invalid_argument("f-profile square integral: need 0 <= u <= v <= 1");
  const double cut = config_.cutoff();
  Quadrature out;
  if (u < cut) out.value += tail_square_integral(u, std::min(v, cut));
  if (v > cut) {
    const Quadrature body = integrate_cells(
        [this](double t) {
          const double f = (*this)(t);
          return f * f;
        },
        std::max(u, cut), v);
    out.value += body.value;
    out.error += body.error;
  }
  return out;
}

double f_profile(const HFunction& h, double t, const ConstructionConfig& config) {
  return FProfile(h, config)(t);
}

double h_reconstruct_check(const HFunction& h, const FProfile& f, std::span<const double> grid) {
  double worst = 0.0;
  for (double t : grid) {
    if (!(t > 0.0 && t <= 1.0)) throw std::invalid_argument("h_reconstruct_check: grid must lie in (0, 1]");
    const double head = f.integral(0.0, t).value;
    const double tail = f.square_integral(t, 1.0).value;
    worst = std::max(worst, std::abs(h.value(t) - (head * head + t * tail)));
  }
  return worst;
}

}  // namespace orlicz
