#include "orlicz/piecewise_affine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

// Slopes recovered from data carry rounding; convexity is checked up to this
// relative slack.
constexpr double kSlopeSlack = 1e-10;

// Knots of a conjugate closer than this (relative) are merged.
constexpr double kMergeGap = 1e-12;

bool nearly_below(double a, double b) {
  return a <= b + kSlopeSlack * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

PiecewiseAffine::PiecewiseAffine(std::vector<double> knots,
                                 std::vector<double> values, double ext_slope,
                                 bool bounded)
    : knots_(std::move(knots)),
      values_(std::move(values)),
      ext_slope_(ext_slope),
      bounded_(bounded) {
  validate();
}

PiecewiseAffine PiecewiseAffine::with_extension(std::vector<double> knots,
                                                std::vector<double> values,
                                                double ext_slope) {
  return PiecewiseAffine(std::move(knots), std::move(values), ext_slope, false);
}

PiecewiseAffine PiecewiseAffine::with_domain_bound(std::vector<double> knots,
                                                   std::vector<double> values) {
  return PiecewiseAffine(std::move(knots), std::move(values), 0.0, true);
}

void PiecewiseAffine::validate() const {
  if (knots_.size() != values_.size())
    throw ConstructionError("piecewise-affine: knots and values differ in length");
  if (knots_.size() < 2)
    throw ConstructionError("piecewise-affine: need at least two knots");
  if (knots_[0] != 0.0 || values_[0] != 0.0)
    throw ConstructionError("piecewise-affine: first knot must be (0, 0)", 0);
  for (std::size_t k = 0; k < knots_.size(); ++k) {
    if (!std::isfinite(knots_[k]) || !std::isfinite(values_[k]))
      throw ConstructionError("piecewise-affine: non-finite knot", k);
  }
  double previous = 0.0;
  for (std::size_t k = 1; k < knots_.size(); ++k) {
    if (!(knots_[k] > knots_[k - 1]))
      throw ConstructionError("piecewise-affine: knots not strictly increasing", k);
    if (values_[k] < values_[k - 1])
      throw ConstructionError("piecewise-affine: values decrease", k);
    const double s = slope(k - 1);
    if (k > 1 && !nearly_below(previous, s))
      throw ConstructionError("piecewise-affine: slopes decrease (not convex)", k);
    previous = s;
  }
  if (!bounded_) {
    if (!std::isfinite(ext_slope_) || !nearly_below(previous, ext_slope_))
      throw ConstructionError("piecewise-affine: extension slope below last slope",
                              knots_.size() - 1);
    if (!(ext_slope_ > 0.0))
      throw ConstructionError(
          "piecewise-affine: zero extension slope leaves a non-invertible tail",
          knots_.size() - 1);
  }
}

double PiecewiseAffine::slope(std::size_t k) const {
  return (values_[k + 1] - values_[k]) / (knots_[k + 1] - knots_[k]);
}

bool PiecewiseAffine::in_domain(double t) const {
  return t >= 0.0 && (!bounded_ || t <= knots_.back());
}

std::optional<double> PiecewiseAffine::domain_bound() const {
  if (bounded_) return knots_.back();
  return std::nullopt;
}

double PiecewiseAffine::operator()(double t) const {
  if (!(t >= 0.0))
    throw std::invalid_argument("piecewise-affine: negative argument");
  const double last = knots_.back();
  if (t >= last) {
    if (t == last) return values_.back();
    if (bounded_)
      throw std::domain_error("piecewise-affine: argument " + std::to_string(t) +
                              " beyond domain bound " + std::to_string(last));
    return values_.back() + ext_slope_ * (t - last);
  }
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - knots_.begin()) - 1;
  if (t == knots_[k]) return values_[k];
  return values_[k] + (t - knots_[k]) * slope(k);
}

double PiecewiseAffine::inverse(double y) const {
  if (!(y >= 0.0))
    throw std::invalid_argument("piecewise-affine: negative inverse argument");
  if (y == 0.0) return 0.0;
  const auto it = std::lower_bound(values_.begin(), values_.end(), y);
  if (it == values_.end()) {
    if (bounded_) return knots_.back();
    return knots_.back() + (y - values_.back()) / ext_slope_;
  }
  const std::size_t k = static_cast<std::size_t>(it - values_.begin());
  if (values_[k] == y) {
    // leftmost knot carrying this value
    std::size_t j = k;
    while (j > 0 && values_[j - 1] == y) --j;
    return knots_[j];
  }
  return knots_[k - 1] + (y - values_[k - 1]) / slope(k - 1);
}

PiecewiseAffine PiecewiseAffine::conjugate() const {
  // Q(y) = y * t_k - f(t_k) on [s_k, s_{k+1}], s_k the slopes of f.
  std::vector<double> knots{0.0};
  std::vector<double> values{0.0};
  auto push = [&](double y, double q) {
    if (y - knots.back() <= kMergeGap * std::max(1.0, std::abs(y))) return;
    knots.push_back(y);
    values.push_back(std::max(q, values.back()));
  };
  const std::size_t m = segments();
  for (std::size_t k = 0; k < m; ++k) {
    const double s = slope(k);
    push(s, s * knots_[k] - values_[k]);
  }
  if (bounded_) {
    const double ext = knots_.back();
    if (knots.size() == 1) {
      // f vanishes on its whole domain: the conjugate is linear.
      knots.push_back(1.0);
      values.push_back(ext);
    }
    return with_extension(std::move(knots), std::move(values), ext);
  }
  push(ext_slope_, ext_slope_ * knots_.back() - values_.back());
  return with_domain_bound(std::move(knots), std::move(values));
}

PiecewiseAffine PiecewiseAffine::rescaled_argument(double lambda) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("piecewise-affine: rescale factor must be positive");
  std::vector<double> knots(knots_);
  for (double& t : knots) t /= lambda;
  return PiecewiseAffine(std::move(knots), values_, ext_slope_ * lambda, bounded_);
}

}  // namespace orlicz
