#include "orlicz/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "orlicz/errors.hpp"
#include "orlicz/two_concavity.hpp"

namespace orlicz {
namespace {

constexpr double kKnotSlack = 1e-12;

}  // namespace

std::vector<std::vector<double>> conjugate_inverse_knots(const WeightMatrix& a) {
  if (!a.square()) throw std::invalid_argument("conjugate_inverse_knots: matrix must be square");
  const std::size_t n = a.rows();
  const double dn = static_cast<double>(n);
  std::vector<std::vector<double>> knots(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> tail_sq(n + 1, 0.0);  // Sum_{j >= m} a_ij^2
    for (std::size_t m = n; m-- > 0;) tail_sq[m] = tail_sq[m + 1] + a(i, m) * a(i, m);
    double head = 0.0;
    for (std::size_t l = 1; l <= n; ++l) {
      head += a(i, l - 1);
      const double mean_head = head / dn;
      const double frac = static_cast<double>(l) / dn;
      knots[i][l - 1] = std::sqrt(mean_head * mean_head + frac * (tail_sq[l] / dn));
    }
  }
  return knots;
}

MusielakSystem functions_from_matrix(const WeightMatrix& a) {
  const auto v = conjugate_inverse_knots(a);
  const std::size_t n = a.rows();
  const double dn = static_cast<double>(n);
  std::vector<OrliczFunction> functions;
  functions.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = v[i];
    double prev_value = 0.0;
    double prev_step = INFINITY;
    for (std::size_t l = 0; l < n; ++l) {
      const double step = row[l] - prev_value;
      if (!(step > 0.0))
        throw ConstructionError("functions_from_matrix: row " + std::to_string(i) +
                                    " knot values not increasing at l = " + std::to_string(l + 1),
                                i);
      if (step > prev_step * (1.0 + kKnotSlack))
        throw ConstructionError("functions_from_matrix: row " + std::to_string(i) +
                                    " knot values not concave at l = " + std::to_string(l + 1),
                                i);
      prev_step = step;
      prev_value = row[l];
    }
    // M_i* is the inverse of the piecewise-linear M_i*^{-1}.
    std::vector<double> knots{0.0};
    std::vector<double> values{0.0};
    for (std::size_t l = 1; l <= n; ++l) {
      knots.push_back(row[l - 1]);
      values.push_back(static_cast<double>(l) / dn);
    }
    const double ext = (1.0 / dn) / prev_step;
    auto conj = PiecewiseAffine::with_extension(std::move(knots), std::move(values), ext);
    functions.push_back(OrliczFunction::piecewise(conj.conjugate()));
  }
  return MusielakSystem(std::move(functions));
}

OrliczFunction normalize_conjugate(const OrliczFunction& m) {
  const OrliczFunction conj = m.conjugate();
  const double y = conj.inverse(1.0);
  if (!(y > 0.0) || !conj.in_domain(y) || std::abs(conj(y) - 1.0) > 1e-12)
    throw ConstructionError("normalization failure: M* is not invertible at 1");
  return m.rescaled_argument(1.0 / y);
}

OrliczFunction normalized_power(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ConstructionError("normalized_power: need p > 1");
  const double q = p / (p - 1.0);
  return OrliczFunction::power(p, std::pow(q, 1.0 - p) / p);
}

OrliczFunction power_orlicz(double p) {
  if (!(p > 1.0 && p < 2.0))
    throw ConstructionError("power_orlicz: strictly 2-concave pipeline needs 1 < p < 2");
  return normalized_power(p);
}

MatrixConstruction matrix_from_profiles(std::span<const HFunction> hs,
                                        const ConstructionConfig& config) {
  config.validate();
  const std::size_t n = config.n;
  if (hs.size() != n) throw std::invalid_argument("matrix_from_profiles: need one H per row");
  const double dn = static_cast<double>(n);
  std::vector<double> entries(n * n);
  std::vector<std::vector<double>> errors(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const FProfile f(hs[i], config);
    for (std::size_t j = 0; j < n; ++j) {
      const double lo = static_cast<double>(j) / dn;
      const double hi = j + 1 == n ? 1.0 : static_cast<double>(j + 1) / dn;
      const Quadrature q = f.integral(lo, hi);
      double value = dn * q.value;
      errors[i][j] = dn * q.error;
      if (!(value > 0.0) || !std::isfinite(value))
        throw ConstructionError("matrix_from_profiles: row " + std::to_string(i) +
                                    " has a non-positive entry at column " + std::to_string(j),
                                i);
      if (j > 0) {
        const double left = entries[i * n + j - 1];
        if (value > left) {
          // quadrature noise on (nearly) flat profiles
          if (value - left > 100.0 * config.tolerance * std::max(1.0, left))
            throw ConstructionError("matrix_from_profiles: row " + std::to_string(i) +
                                        " increases at column " + std::to_string(j),
                                    i);
          value = left;
        }
      }
      entries[i * n + j] = value;
    }
  }
  return {WeightMatrix(n, n, std::move(entries)), std::move(errors)};
}

MatrixConstruction matrix_from_functions(const MusielakSystem& system, std::size_t n,
                                         const ConstructionConfig& config) {
  if (system.dimension() != n)
    throw std::invalid_argument("matrix_from_functions: system dimension differs from n");
  ConstructionConfig cfg = config;
  cfg.n = n;
  std::vector<HFunction> hs;
  hs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const OrliczFunction& m = system[i];
    if (!m.traits().twice_differentiable || !m.traits().strictly_convex)
      throw ConstructionError("matrix_from_functions: function " + std::to_string(i) +
                                  " is not strictly convex and twice differentiable",
                              i);
    if (!is_two_concave(m).concave)
      throw ConstructionError("matrix_from_functions: function " + std::to_string(i) +
                                  " is not 2-concave",
                              i);
    hs.push_back(HFunction::from_orlicz(normalize_conjugate(m), cfg.fd_step));
  }
  return matrix_from_profiles(hs, cfg);
}

EquivalenceReport knot_equivalence(const std::vector<std::vector<double>>& numerator,
                                   const std::vector<std::vector<double>>& denominator) {
  if (numerator.size() != denominator.size())
    throw std::invalid_argument("knot_equivalence: row counts differ");
  std::vector<double> ratios;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    if (numerator[i].size() != denominator[i].size())
      throw std::invalid_argument("knot_equivalence: knot counts differ");
    for (std::size_t l = 0; l < numerator[i].size(); ++l)
      ratios.push_back(numerator[i][l] / denominator[i][l]);
  }
  return report_from_ratios(std::move(ratios), "knot ratios of M_i*^{-1}");
}

RoundtripReport roundtrip_check(const WeightMatrix& a, const ConstructionConfig& config) {
  if (!a.square()) throw std::invalid_argument("roundtrip_check: matrix must be square");
  const std::size_t n = a.rows();
  const double dn = static_cast<double>(n);
  ConstructionConfig cfg = config;
  cfg.n = n;

  RoundtripReport report;
  report.original_knots = conjugate_inverse_knots(a);
  // validates the knots
  (void)functions_from_matrix(a);

  std::vector<double> t(n);
  for (std::size_t l = 0; l < n; ++l) t[l] = l + 1 == n ? 1.0 : static_cast<double>(l + 1) / dn;
  std::vector<HFunction> hs;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = report.original_knots[i];
    std::vector<double> h(n);
    for (std::size_t l = 0; l < n; ++l) h[l] = (v[l] / v.back()) * (v[l] / v.back());
    report.fits.push_back(fit_concave_power_mixture(t, h));
    hs.push_back(report.fits.back().h());
  }
  const MatrixConstruction built = matrix_from_profiles(hs, cfg);

  // undo the normalization: f scales with sqrt(H)
  std::vector<double> entries(n * n);
  report.reconstructed_matrix.assign(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double scale = report.original_knots[i].back();
    for (std::size_t j = 0; j < n; ++j) {
      entries[i * n + j] = scale * built.matrix(i, j);
      report.reconstructed_matrix[i][j] = entries[i * n + j];
    }
  }
  const WeightMatrix rebuilt(n, n, std::move(entries));
  report.reconstructed_knots = conjugate_inverse_knots(rebuilt);
  report.equivalence = knot_equivalence(report.reconstructed_knots, report.original_knots);
  return report;
}

}  // namespace orlicz
