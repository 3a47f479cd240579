#include "orlicz/matrix_norm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orlicz/errors.hpp"

namespace orlicz {

double matrix_norm_a(const WeightMatrix& a, std::span<const double> x) {
  if (x.size() != a.rows()) throw std::invalid_argument("matrix_norm_a: vector length mismatch");
  std::vector<double> products;
  products.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) products.push_back(a(i, j) * std::abs(x[i]));
  const std::size_t budget = a.cols();
  std::partial_sort(products.begin(), products.begin() + static_cast<std::ptrdiff_t>(budget),
                    products.end(), std::greater<>());
  double sum = 0.0;
  for (std::size_t k = 0; k < budget; ++k) sum += products[k];
  return sum;
}

MusielakSystem matrix_norm_system(const WeightMatrix& a) {
  const double big_n = static_cast<double>(a.cols());
  std::vector<OrliczFunction> functions;
  functions.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<double> knots = a.prefix_sums(i);
    std::vector<double> values(knots.size());
    for (std::size_t m = 0; m < knots.size(); ++m) {
      if (m > 0 && !(knots[m] > knots[m - 1]))
        throw ConstructionError("matrix_norm_system: prefix sums of row " +
                                    std::to_string(i) + " are not strictly increasing",
                                i);
      values[m] = static_cast<double>(m) / big_n;
    }
    const double last_slope = (1.0 / big_n) / a(i, a.cols() - 1);
    auto conj = PiecewiseAffine::with_extension(std::move(knots), std::move(values), last_slope);
    functions.push_back(OrliczFunction::piecewise(conj.conjugate()));
  }
  return MusielakSystem(std::move(functions));
}

MatrixNormSandwich lemma_matrixnorm_check(const WeightMatrix& a, std::span<const double> x,
                                          double tol) {
  return lemma_matrixnorm_check(a, matrix_norm_system(a), x, tol);
}

MatrixNormSandwich lemma_matrixnorm_check(const WeightMatrix& a, const MusielakSystem& system,
                                          std::span<const double> x, double tol) {
  MatrixNormSandwich out;
  out.norm_a = matrix_norm_a(a, x);
  out.norm_musielak = luxemburg_norm(system, x);
  if (out.norm_a == 0.0) {
    out.ratio = 1.0;
    out.passed = out.norm_musielak == 0.0;
    return out;
  }
  out.ratio = out.norm_musielak / out.norm_a;
  out.passed = out.ratio >= 0.5 * (1.0 - tol) && out.ratio <= 2.0 * (1.0 + tol);
  return out;
}

}  // namespace orlicz
