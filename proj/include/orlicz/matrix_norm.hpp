#pragma once

#include <span>

#include "orlicz/musielak.hpp"
#include "orlicz/weight_matrix.hpp"

namespace orlicz {

/// ||x||_a = max over budgets l_1 + ... + l_n <= N of
/// Sum_i (Sum_{j <= l_i} a(i, j)) |x_i|. Computed as the sum of the N largest
/// products a(i, j) |x_i|; nonincreasing rows make the choice prefix-closed.
double matrix_norm_a(const WeightMatrix& a, std::span<const double> x);

/// System whose conjugates interpolate M_i*(Sum_{j <= m} a(i, j)) = m / N,
/// m = 0..N, extended past the last point with the final slope.
MusielakSystem matrix_norm_system(const WeightMatrix& a);

struct MatrixNormSandwich {
  double norm_a = 0.0;
  double norm_musielak = 0.0;
  double ratio = 1.0;  // norm_musielak / norm_a, 1 for x = 0
  bool passed = false;  // norm_a / 2 <= norm_musielak <= 2 norm_a
};

/// Relative slack granted to the Luxemburg solver in the sandwich.
inline constexpr double kSandwichTolerance = 1e-8;

MatrixNormSandwich lemma_matrixnorm_check(const WeightMatrix& a, std::span<const double> x,
                                          double tol = kSandwichTolerance);
MatrixNormSandwich lemma_matrixnorm_check(const WeightMatrix& a, const MusielakSystem& system,
                                          std::span<const double> x,
                                          double tol = kSandwichTolerance);

}  // namespace orlicz
