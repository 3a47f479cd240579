#include <cmath>
#include <vector>

#include "doctest.h"
#include "orlicz/concave_fit.hpp"
#include "orlicz/constructions.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/families.hpp"
#include "orlicz/two_concavity.hpp"

using namespace orlicz;
using doctest::Approx;

namespace {

struct PowerOracle {
  double p;
  std::vector<double> row;  // n = 4
  double f_quarter;
  double f_one;
};

// mpmath closed form, see tests/oracles/frozen_values.py
const PowerOracle kOracles[] = {
    {1.5,
     {2.3162218681590041604, 0.70118659826932379888, 0.53186051248330065705, 0.45073102108837138371},
     0.86139035353004228894,
     0.42264973081037423549},
    {1.2,
     {3.1308621784701937692, 0.40114166241277224366, 0.26431270566207088799, 0.20368345345496309917},
     0.5386471154839729288,
     0.18350341907227396727},
    {1.8,
     {1.6960716866707674038, 0.86760970405995121781, 0.748265118567478506, 0.68805349070180287234},
     0.9760318607425632906,
     0.66666666666666666667},
};

ConstructionConfig config(std::size_t n) {
  ConstructionConfig c;
  c.n = n;
  return c;
}

std::vector<double> grid64() {
  std::vector<double> g;
  for (int k = 1; k <= 64; ++k) g.push_back(k / 64.0);
  return g;
}

// f for H = t^alpha in closed form
double power_f(double alpha, double t) {
  const double c1 = alpha * std::sqrt(1.0 - alpha) / (2.0 - alpha);
  const double c0 = (1.0 - std::sqrt(1.0 - alpha)) - c1;
  return c0 + c1 * std::pow(t, alpha / 2.0 - 1.0);
}

}  // namespace

TEST_CASE("config validation") {
  ConstructionConfig c = config(4);
  CHECK_NOTHROW(c.validate());
  CHECK(c.cutoff() == Approx(2.5e-7));
  c.t_min = 0.25;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = config(4);
  c.tolerance = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = config(0);
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("knots of the matrix construction") {
  const auto v = conjugate_inverse_knots(WeightMatrix::from_rows({{2, 1}, {2, 1}}));
  CHECK(v[0][0] == Approx(1.1180339887498948482).epsilon(1e-15));
  CHECK(v[0][1] == Approx(1.5).epsilon(1e-15));
  CHECK(v[1][0] == v[0][0]);

  for (std::size_t n : {1u, 2u, 5u, 17u, 64u}) {
    const auto k = conjugate_inverse_knots(WeightMatrix::constant(n, 1.0));
    const auto k3 = conjugate_inverse_knots(WeightMatrix::constant(n, 3.0));
    for (std::size_t l = 1; l <= n; ++l) {
      const double want = std::sqrt(static_cast<double>(l) / static_cast<double>(n));
      CHECK(std::abs(k[0][l - 1] - want) <= 1e-12);
      CHECK(std::abs(k3[n - 1][l - 1] - 3.0 * want) <= 3e-12);
    }
  }

  CounterRng rng(47);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(8);
    const auto a = random_decreasing_matrix(rng, n);
    const auto knots = conjugate_inverse_knots(a);
    for (std::size_t i = 0; i < n; ++i) {
      double mean = 0.0;
      for (double e : a.row(i)) mean += e;
      CHECK(knots[i][n - 1] == Approx(mean / static_cast<double>(n)).epsilon(1e-14));
    }
  }
}

TEST_CASE("functions_from_matrix interpolates the knots") {
  CounterRng rng(53);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng.below(7);
    const auto a = random_decreasing_matrix(rng, n);
    const auto s = functions_from_matrix(a);
    const auto knots = conjugate_inverse_knots(a);
    REQUIRE(s.dimension() == n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto conj = s[i].conjugate();
      for (std::size_t l = 1; l <= n; ++l) {
        const double y = static_cast<double>(l) / static_cast<double>(n);
        CHECK(conj.inverse(y) == Approx(knots[i][l - 1]).epsilon(1e-12));
        CHECK(conj(knots[i][l - 1]) == Approx(y).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("functions_from_matrix against a refined re-derivation") {
  CounterRng rng(59);
  const std::size_t n = 5;
  const auto a = random_decreasing_matrix(rng, n);
  const auto s = functions_from_matrix(a);
  const auto knots = conjugate_inverse_knots(a);
  // rebuild every M_i* through 4 n points of its piecewise-linear inverse
  std::vector<OrliczFunction> refined;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> xs{0.0}, ys{0.0};
    double prev_v = 0.0;
    for (std::size_t l = 1; l <= n; ++l) {
      for (int q = 1; q <= 4; ++q) {
        const double w = q / 4.0;
        xs.push_back(prev_v + w * (knots[i][l - 1] - prev_v));
        ys.push_back((static_cast<double>(l - 1) + w) / static_cast<double>(n));
      }
      prev_v = knots[i][l - 1];
    }
    const double ext = (ys.back() - ys[ys.size() - 2]) / (xs.back() - xs[xs.size() - 2]);
    refined.push_back(OrliczFunction::piecewise(PiecewiseAffine::with_extension(xs, ys, ext)).conjugate());
  }
  const auto report = equivalence_constants(s, MusielakSystem(refined), log_grid(1e-3, 10.0, 300));
  CHECK(report.c_low >= 1.0 - 1e-6);
  CHECK(report.c_high <= 1.0 + 1e-6);
}

TEST_CASE("normalization and the power family") {
  const auto m = power_orlicz(1.5);
  CHECK(m.conjugate().as_power()->exponent == Approx(3.0));
  CHECK(m.conjugate()(1.0) == Approx(1.0).epsilon(1e-14));
  const auto cert = is_two_concave(m);
  CHECK(cert.strictly_concave);
  CHECK_THROWS_AS(power_orlicz(2.5), ConstructionError);
  CHECK_THROWS_AS(power_orlicz(1.0), ConstructionError);
  CHECK(normalized_power(2.5).conjugate()(1.0) == Approx(1.0).epsilon(1e-14));

  const auto pwa = OrliczFunction::piecewise(PiecewiseAffine::with_extension({0.0, 1.0, 3.0}, {0.0, 0.5, 4.0}, 3.0));
  CHECK(normalize_conjugate(pwa).conjugate()(1.0) == Approx(1.0).epsilon(1e-13));
  CHECK(normalize_conjugate(OrliczFunction::power(1.7, 5.0)).conjugate()(1.0) == Approx(1.0).epsilon(1e-13));
}

TEST_CASE("H of a strictly 2-concave function is strictly concave") {
  for (double p : {1.2, 1.5, 1.8}) {
    const auto h = HFunction::from_orlicz(power_orlicz(p));
    CHECK(h.value(1.0) == Approx(1.0).epsilon(1e-14));
    for (int k = 1; k < 255; ++k) {
      const double t = k / 256.0;
      const double d = 1.0 / 256.0;
      CHECK(h.value(t - d) - 2.0 * h.value(t) + h.value(t + d) < 0.0);
    }
  }
}

TEST_CASE("f-profile: degenerate limit and boundary term") {
  const FProfile f(HFunction::identity(), config(4));
  CHECK(f.boundary_term() == 1.0);
  for (double t : {1e-7, 0.01, 0.3, 1.0}) CHECK(f(t) == 1.0);
  CHECK(f_profile(HFunction::identity(), 0.5, config(3)) == 1.0);

  const auto h = HFunction::power(1.0, 2.0 / 3.0);
  const FProfile g(h, config(4));
  CHECK(g(1.0) == Approx(std::sqrt(h.value(1.0)) - std::sqrt(h.value(1.0) - h.first(1.0))).epsilon(1e-15));
  CHECK_THROWS_AS(g(0.0), std::invalid_argument);
  CHECK_THROWS_AS(g(1.5), std::invalid_argument);
}

TEST_CASE("f-profile: power family against the closed form") {
  for (const auto& o : kOracles) {
    const FProfile f(HFunction::from_orlicz(power_orlicz(o.p)), config(4));
    CHECK(f(0.25) == Approx(o.f_quarter).epsilon(1e-12));
    CHECK(f(1.0) == Approx(o.f_one).epsilon(1e-14));
    const double alpha = 2.0 * (o.p - 1.0) / o.p;
    for (double t : {1e-6, 1e-4, 0.01, 0.1, 0.5, 0.9})
      CHECK(f(t) == Approx(power_f(alpha, t)).epsilon(1e-10));
  }
}

TEST_CASE("f-profile: finite-difference backend") {
  const double alpha = 0.6;
  const auto numeric = HFunction::numeric([=](double t) { return std::pow(t, alpha); }, 1e-5, "t^0.6");
  CHECK_FALSE(numeric.is_analytic());
  const FProfile f(numeric, config(4));
  for (double t : {1e-3, 0.05, 0.25, 0.75, 1.0})
    CHECK(f(t) == Approx(power_f(alpha, t)).epsilon(1e-4));
}

TEST_CASE("property: f nonnegative and nonincreasing") {
  std::vector<HFunction> hs{HFunction::identity()};
  for (double p : {1.1, 1.2, 1.5, 1.8, 1.95}) hs.push_back(HFunction::from_orlicz(power_orlicz(p)));
  CounterRng rng(67);
  for (int k = 0; k < 5; ++k) {
    const auto a = random_decreasing_matrix(rng, 6);
    const auto knots = conjugate_inverse_knots(a);
    std::vector<double> t, h;
    for (std::size_t l = 1; l <= 6; ++l) {
      t.push_back(l / 6.0);
      const double v = knots[0][l - 1] / knots[0][5];
      h.push_back(v * v);
    }
    hs.push_back(fit_concave_power_mixture(t, h).h());
  }
  for (const auto& h : hs) {
    const FProfile f(h, config(4));
    double prev = INFINITY;
    for (int k = 1; k <= 256; ++k) {
      const double v = f(k / 256.0);
      CHECK(v >= 0.0);
      CHECK(v <= prev * (1.0 + 1e-12));
      prev = v;
    }
    CHECK(std::isfinite(f.integral(0.0, 1.0).value));
  }
}

TEST_CASE("f-profile: violated hypotheses") {
  // H(t) = t^2 is convex: H - sH' < 0
  CHECK_THROWS_AS(FProfile(HFunction::power(1.0, 2.0), config(4))(0.5), ConstructionError);
  CHECK_THROWS_AS(FProfile(HFunction::power(0.0, 0.5), config(4)), ConstructionError);
}

TEST_CASE("reconstruction identity") {
  for (const auto& o : kOracles) {
    const auto h = HFunction::from_orlicz(power_orlicz(o.p));
    const FProfile f(h, config(4));
    CHECK(h_reconstruct_check(h, f, grid64()) <= 1e-8);
    const double whole = f.integral(0.0, 1.0).value;
    CHECK(whole * whole == Approx(h.value(1.0)).epsilon(1e-9));
  }
  const FProfile one(HFunction::identity(), config(4));
  CHECK(h_reconstruct_check(HFunction::identity(), one, grid64()) <= 1e-14);
  const std::vector<double> bad{0.0};
  CHECK_THROWS_AS(h_reconstruct_check(HFunction::identity(), one, bad), std::invalid_argument);
}

TEST_CASE("matrix_from_functions: power family oracle") {
  for (const auto& o : kOracles) {
    const MusielakSystem s(std::vector<OrliczFunction>(2, power_orlicz(o.p)));
    const std::vector<double> ps{o.p};
    const auto built = matrix_from_functions(power_system(4, ps), 4, config(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        CHECK(built.matrix(i, j) == Approx(o.row[j]).epsilon(1e-9));
        CHECK(built.errors[i][j] <= 1e-8);
      }
  }
}

TEST_CASE("matrix_from_functions: degenerate limit and mixed systems") {
  // M*(t) = t^2, so H(t) = t and f = 1
  const MusielakSystem quad(std::vector<OrliczFunction>(3, normalized_power(2.0)));
  const auto ones = matrix_from_functions(quad, 3, config(3));
  for (double e : ones.matrix.entries()) CHECK(e == Approx(1.0).epsilon(1e-12));

  // unnormalized input is rescaled first
  const MusielakSystem scaled(std::vector<OrliczFunction>(4, OrliczFunction::power(1.5, 7.0)));
  const auto b = matrix_from_functions(scaled, 4, config(4));
  CHECK(b.matrix(0, 0) == Approx(kOracles[0].row[0]).epsilon(1e-9));

  const std::vector<double> ps{1.2, 1.5, 1.8};
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto m = matrix_from_functions(power_system(n, ps), n, config(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(m.matrix(i, j) > 0.0);
        if (j > 0) CHECK(m.matrix(i, j) <= m.matrix(i, j - 1));
      }
  }
}

TEST_CASE("matrix_from_functions: rejected inputs") {
  const MusielakSystem cubic(std::vector<OrliczFunction>(2, OrliczFunction::power(3.0)));
  CHECK_THROWS_AS(matrix_from_functions(cubic, 2, config(2)), ConstructionError);
  const auto pwa = functions_from_matrix(WeightMatrix::constant(2, 1.0));
  CHECK_THROWS_AS(matrix_from_functions(pwa, 2, config(2)), ConstructionError);
  const MusielakSystem ok(std::vector<OrliczFunction>(2, power_orlicz(1.5)));
  CHECK_THROWS_AS(matrix_from_functions(ok, 3, config(3)), std::invalid_argument);
}

TEST_CASE("concave power-mixture fit") {
  const std::vector<double> t{0.25, 0.5, 0.75, 1.0};
  const std::vector<double> lin{0.25, 0.5, 0.75, 1.0};
  const auto fit = fit_concave_power_mixture(t, lin);
  CHECK(fit.weights.front() == Approx(1.0).epsilon(1e-9));
  CHECK(fit.max_relative_residual <= 1e-9);
  CHECK(fit.h().value(0.3) == Approx(0.3).epsilon(1e-9));

  std::vector<double> sq;
  for (double s : t) sq.push_back(std::sqrt(s));
  const auto root = fit_concave_power_mixture(t, sq);
  CHECK(root.max_relative_residual <= 1e-5);
  CHECK(root.h().value(1.0) == Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(fit_concave_power_mixture(t, std::vector<double>{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(fit_concave_power_mixture(t, std::vector<double>{0, 1, 2, 3}), ConstructionError);
}

TEST_CASE("round trip") {
  for (std::size_t n : {1u, 2u, 4u, 6u}) {
    const auto r = roundtrip_check(WeightMatrix::constant(n, 1.0), config(n));
    CHECK(r.equivalence.c_low == Approx(1.0).epsilon(1e-6));
    CHECK(r.equivalence.c_high == Approx(1.0).epsilon(1e-6));
    for (const auto& row : r.reconstructed_matrix)
      for (double e : row) CHECK(e == Approx(1.0).epsilon(1e-6));
  }

  for (const auto& o : kOracles) {
    const MusielakSystem s(std::vector<OrliczFunction>(4, power_orlicz(o.p)));
    const auto a = matrix_from_functions(s, 4, config(4)).matrix;
    const auto r = roundtrip_check(a, config(4));
    CHECK(r.equivalence.c_low >= 0.25);
    CHECK(r.equivalence.c_high <= 4.0);
    const auto back = r.equivalence.swapped();
    CHECK(back.c_low == Approx(1.0 / r.equivalence.c_high).epsilon(1e-15));
    CHECK(back.c_high == Approx(1.0 / r.equivalence.c_low).epsilon(1e-15));
    const auto again = knot_equivalence(r.original_knots, r.reconstructed_knots);
    CHECK(again.c_low == Approx(back.c_low).epsilon(1e-15));
  }
  CHECK_THROWS_AS(roundtrip_check(WeightMatrix::from_rows({{2, 1, 1}}), config(1)), std::invalid_argument);
}
