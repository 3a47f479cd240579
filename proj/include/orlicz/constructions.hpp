#pragma once

#include <span>
#include <vector>

#include "orlicz/concave_fit.hpp"
#include "orlicz/equivalence.hpp"
#include "orlicz/f_profile.hpp"
#include "orlicz/musielak.hpp"
#include "orlicz/weight_matrix.hpp"

namespace orlicz {

/// v(i, l) = sqrt(((1/n) Sum_{j<=l} a_ij)^2 + (l/n)(1/n) Sum_{j>l} a_ij^2),
/// l = 1..n: the prescribed values of M_i*^{-1} at l/n.
std::vector<std::vector<double>> conjugate_inverse_knots(const WeightMatrix& a);

/// Musielak system whose conjugate inverses interpolate the knots above
/// linearly on each [(l-1)/n, l/n], through the origin, extended linearly.
/// Throws ConstructionError (index = row) when a row's knots are not
/// increasing and concave.
MusielakSystem functions_from_matrix(const WeightMatrix& a);

/// M(lambda t) with lambda chosen so the conjugate satisfies M*(1) = 1.
OrliczFunction normalize_conjugate(const OrliczFunction& m);

/// Power function with M*(1) = 1: M(t) = q^{1-p} t^p / p, M*(t) = t^q.
/// Accepts any p > 1; `power_orlicz` below restricts to the strictly
/// 2-concave range.
OrliczFunction normalized_power(double p);
/// Throws ConstructionError unless 1 < p < 2.
OrliczFunction power_orlicz(double p);

/// Matrix with entries a(i, j) = n Int_{(j-1)/n}^{j/n} f_i from the
/// f-profiles of the given H_i.
struct MatrixConstruction {
  WeightMatrix matrix;
  /// Quadrature error estimate of every entry.
  std::vector<std::vector<double>> errors;
};

MatrixConstruction matrix_from_profiles(std::span<const HFunction> hs, const ConstructionConfig& config);

/// Normalizes each M_i, sets H_i = (M_i*^{-1})^2 and builds the matrix.
/// Every M_i must be smooth and 2-concave; the non-strict case (H linear) is
/// accepted as the degenerate limit.
MatrixConstruction matrix_from_functions(const MusielakSystem& system, std::size_t n,
                                         const ConstructionConfig& config);

/// Matrix -> Musielak system -> smooth concave fit -> matrix -> knots.
struct RoundtripReport {
  EquivalenceReport equivalence;  // reconstructed / original knot values
  std::vector<std::vector<double>> original_knots;
  std::vector<std::vector<double>> reconstructed_knots;
  std::vector<ConcaveFit> fits;
  std::vector<std::vector<double>> reconstructed_matrix;
};

RoundtripReport roundtrip_check(const WeightMatrix& a, const ConstructionConfig& config);

/// Report of ratio numerator / denominator over matching knot tables.
EquivalenceReport knot_equivalence(const std::vector<std::vector<double>>& numerator,
                                   const std::vector<std::vector<double>>& denominator);

}  // namespace orlicz
