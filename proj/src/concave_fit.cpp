#include "orlicz/concave_fit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

constexpr double kRidge = 1e-10;

// Lawson-Hanson active set.
Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  const Eigen::Index cols = a.cols();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(cols);
  std::vector<bool> passive(static_cast<std::size_t>(cols), false);
  const double tol = 1e-12 * std::max(1.0, a.norm() * b.norm());

  auto solve_passive = [&]() {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index j = 0; j < cols; ++j)
      if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
    Eigen::MatrixXd sub(a.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
    const Eigen::VectorXd zs = sub.colPivHouseholderQr().solve(b);
    Eigen::VectorXd z = Eigen::VectorXd::Zero(cols);
    for (std::size_t k = 0; k < idx.size(); ++k) z(idx[k]) = zs(static_cast<Eigen::Index>(k));
    return z;
  };

  for (int outer = 0; outer < 3 * cols; ++outer) {
    const Eigen::VectorXd w = a.transpose() * (b - a * x);
    Eigen::Index best = -1;
    for (Eigen::Index j = 0; j < cols; ++j)
      if (!passive[static_cast<std::size_t>(j)] && w(j) > tol && (best < 0 || w(j) > w(best))) best = j;
    if (best < 0) break;
    passive[static_cast<std::size_t>(best)] = true;
    for (int inner = 0; inner < 3 * cols; ++inner) {
      const Eigen::VectorXd z = solve_passive();
      double step = 1.0;
      bool feasible = true;
      for (Eigen::Index j = 0; j < cols; ++j) {
        if (passive[static_cast<std::size_t>(j)] && z(j) <= 0.0) {
          feasible = false;
          step = std::min(step, x(j) / (x(j) - z(j)));
        }
      }
      if (feasible) {
        x = z;
        break;
      }
      x += step * (z - x);
      for (Eigen::Index j = 0; j < cols; ++j) {
        if (passive[static_cast<std::size_t>(j)] && x(j) <= 1e-15) {
          passive[static_cast<std::size_t>(j)] = false;
          x(j) = 0.0;
        }
      }
    }
  }
  return x;
}

}  // namespace

std::vector<double> default_fit_exponents() {
  std::vector<double> out;
  for (int k = 10; k >= 1; --k) out.push_back(0.1 * k);
  return out;
}

HFunction ConcaveFit::h() const {
  const auto alpha = exponents;
  const auto w = weights;
  auto sum = [alpha, w](int order) {
    return [alpha, w, order](double t) {
      double s = 0.0;
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == 0.0) continue;
        const double a = alpha[k];
        if (order == 0) {
          if (t > 0.0) s += w[k] * std::pow(t, a);
        } else if (order == 1) {
          s += w[k] * a * std::pow(t, a - 1.0);
        } else if (a != 1.0) {
          s += w[k] * a * (a - 1.0) * std::pow(t, a - 2.0);
        }
      }
      return s;
    };
  };
  return HFunction::analytic(sum(0), sum(1), sum(2), "power mixture fit");
}

ConcaveFit fit_concave_power_mixture(std::span<const double> t, std::span<const double> values,
                                     std::span<const double> exponents) {
  if (t.size() != values.size() || t.empty())
    throw std::invalid_argument("fit_concave_power_mixture: need matching, nonempty data");
  std::vector<double> alpha = exponents.empty() ? default_fit_exponents()
                                                : std::vector<double>(exponents.begin(), exponents.end());
  for (double a : alpha)
    if (!(a > 0.0 && a <= 1.0))
      throw std::invalid_argument("fit_concave_power_mixture: exponents must lie in (0, 1]");
  for (std::size_t l = 0; l < t.size(); ++l)
    if (!(t[l] > 0.0) || !(values[l] > 0.0))
      throw ConstructionError("fit_concave_power_mixture: data must be positive", l);

  const auto rows = static_cast<Eigen::Index>(t.size());
  const auto cols = static_cast<Eigen::Index>(alpha.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows + cols, cols);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(rows + cols);
  for (Eigen::Index l = 0; l < rows; ++l) {
    const auto ul = static_cast<std::size_t>(l);
    for (Eigen::Index k = 0; k < cols; ++k)
      a(l, k) = std::pow(t[ul], alpha[static_cast<std::size_t>(k)]) / values[ul];
    b(l) = 1.0;
  }
  // the ridge only penalizes curvature, so H = t is never pulled away from
  // linear data
  for (Eigen::Index k = 0; k < cols; ++k)
    a(rows + k, k) = std::sqrt(kRidge) * 10.0 * (1.0 - alpha[static_cast<std::size_t>(k)]);

  Eigen::VectorXd w = nnls(a, b);
  const double top = w.maxCoeff();
  if (!(top > 0.0)) throw ConstructionError("fit_concave_power_mixture: degenerate fit");
  for (Eigen::Index k = 0; k < cols; ++k)
    if (w(k) < 1e-12 * top) w(k) = 0.0;
  // H(1) = Sum w = 1
  w /= w.sum();

  ConcaveFit fit;
  fit.exponents = alpha;
  fit.weights.assign(w.data(), w.data() + w.size());
  // scale the data the same way before measuring residuals
  double scale = 0.0;
  for (std::size_t l = 0; l < t.size(); ++l)
    if (t[l] == 1.0) scale = values[l];
  if (scale == 0.0) scale = 1.0;
  const HFunction h = fit.h();
  for (std::size_t l = 0; l < t.size(); ++l)
    fit.max_relative_residual =
        std::max(fit.max_relative_residual, std::abs(h.value(t[l]) * scale / values[l] - 1.0));
  return fit;
}

}  // namespace orlicz
