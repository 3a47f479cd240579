#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orlicz/orlicz_function.hpp"

namespace orlicz {

/// Ordered list M_1, ..., M_n defining the norm ||.||_{Sum M_i} on R^n.
class MusielakSystem {
 public:
  explicit MusielakSystem(std::vector<OrliczFunction> functions);

  std::size_t dimension() const { return functions_.size(); }
  const OrliczFunction& operator[](std::size_t i) const { return functions_[i]; }
  const std::vector<OrliczFunction>& functions() const { return functions_; }

  /// The system of conjugates M_1*, ..., M_n*.
  MusielakSystem conjugate() const;

 private:
  std::vector<OrliczFunction> functions_;
};

/// Relative tolerance of the Luxemburg bisection.
inline constexpr double kNormTolerance = 1e-10;
inline constexpr int kNormMaxIterations = 200;

/// Sum_i M_i(|x_i| / rho); empty when some |x_i| / rho leaves the domain of
/// M_i (the modular is +inf there).
std::optional<double> modular(const MusielakSystem& system,
                              std::span<const double> x, double rho);

/// inf{ rho > 0 : Sum_i M_i(|x_i| / rho) <= 1 }, 0 for x = 0.
double luxemburg_norm(const MusielakSystem& system, std::span<const double> x,
                      double rel_tol = kNormTolerance);

}  // namespace orlicz
