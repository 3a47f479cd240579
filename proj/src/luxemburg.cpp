#include "orlicz/musielak.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orlicz/errors.hpp"

namespace orlicz {

MusielakSystem::MusielakSystem(std::vector<OrliczFunction> functions)
    : functions_(std::move(functions)) {
  if (functions_.empty())
    throw ConstructionError("Musielak system needs at least one function");
}

MusielakSystem MusielakSystem::conjugate() const {
  std::vector<OrliczFunction> out;
  out.reserve(functions_.size());
  for (const auto& m : functions_) out.push_back(m.conjugate());
  return MusielakSystem(std::move(out));
}

std::optional<double> modular(const MusielakSystem& system,
                              std::span<const double> x, double rho) {
  if (x.size() != system.dimension())
    throw std::invalid_argument("modular: vector length does not match system dimension");
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = std::abs(x[i]) / rho;
    if (!system[i].in_domain(t)) return std::nullopt;
    sum += system[i](t);
  }
  return sum;
}

namespace {

bool feasible(const MusielakSystem& system, std::span<const double> x, double rho) {
  const auto m = modular(system, x, rho);
  return m && *m <= 1.0;
}

}  // namespace

double luxemburg_norm(const MusielakSystem& system, std::span<const double> x,
                      double rel_tol) {
  if (x.size() != system.dimension())
    throw std::invalid_argument("luxemburg_norm: vector length does not match system dimension");
  double sup = 0.0;
  double l1 = 0.0;
  for (double v : x) {
    sup = std::max(sup, std::abs(v));
    l1 += std::abs(v);
  }
  if (sup == 0.0) return 0.0;

  const double n = static_cast<double>(x.size());
  double max_inv_one = 0.0;
  double min_inv_share = INFINITY;
  for (const auto& m : system.functions()) {
    max_inv_one = std::max(max_inv_one, m.inverse(1.0));
    min_inv_share = std::min(min_inv_share, m.inverse(1.0 / n));
  }
  double lo = sup / max_inv_one;
  double hi = l1 / min_inv_share;

  // The bracket is sound for strictly increasing M_i; plateaus and rounding
  // can push an end to the wrong side, so widen until it brackets.
  for (int k = 0; k < 200 && !feasible(system, x, hi); ++k) hi *= 2.0;
  for (int k = 0; k < 200 && lo > 0.0 && feasible(system, x, lo); ++k) lo *= 0.5;
  if (!feasible(system, x, hi))
    throw std::runtime_error("luxemburg_norm: could not bracket the norm");

  for (int it = 0; it < kNormMaxIterations && hi - lo > rel_tol * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(system, x, mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace orlicz
