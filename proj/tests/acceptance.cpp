// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "orlicz/averages.hpp"
#include "orlicz/constructions.hpp"
#include "orlicz/embedding.hpp"
#include "orlicz/families.hpp"
#include "orlicz/matrix_norm.hpp"
#include "support.hpp"

using namespace orlicz;

namespace {

struct Band {
  double lo = INFINITY;
  double hi = 0.0;
  void add(double r) {
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  double spread() const { return hi / lo; }
};

// The band for n+1 lies inside the band for n widened by 25% on each side.
bool stable(const std::vector<Band>& bands, double within = 0.25) {
  for (std::size_t k = 0; k + 1 < bands.size(); ++k) {
    if (bands[k + 1].lo < (1.0 - within) * bands[k].lo) return false;
    if (bands[k + 1].hi > (1.0 + within) * bands[k].hi) return false;
  }
  return true;
}

// Largest relative move of either end point between consecutive n.
double drift(const std::vector<Band>& bands) {
  double worst = 0.0;
  for (std::size_t k = 0; k + 1 < bands.size(); ++k)
    worst = std::max({worst, std::abs(bands[k + 1].lo / bands[k].lo - 1.0),
                      std::abs(bands[k + 1].hi / bands[k].hi - 1.0)});
  return worst;
}

std::string describe(const std::vector<Band>& bands, std::size_t first_n) {
  std::string s;
  char buf[96];
  for (std::size_t k = 0; k < bands.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%sn=%zu:[%.4f,%.4f]", k ? " " : "", first_n + k, bands[k].lo,
                  bands[k].hi);
    s += buf;
  }
  std::snprintf(buf, sizeof buf, "; end-point drift %.1f%%", 100.0 * drift(bands));
  return s + buf;
}

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void run(int id, const std::string& what, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    const auto [ok, detail] = body();
    report(id, ok, what, detail);
  } catch (const std::exception& e) {
    report(id, false, what, std::string("exception: ") + e.what());
  }
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double brute_matrix_norm(const WeightMatrix& a, const std::vector<double>& x) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> l(n, 0);
  double best = 0.0;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t left) {
    if (i == n) {
      double v = 0.0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < l[r]; ++j) v += a(r, j) * std::abs(x[r]);
      best = std::max(best, v);
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      l[i] = c;
      walk(i + 1, left - c);
    }
  };
  walk(0, a.cols());
  return best;
}

ConstructionConfig config(std::size_t n) {
  ConstructionConfig c;
  c.n = n;
  return c;
}

const std::vector<double> kMixed{1.2, 1.5, 1.8};

}  // namespace

int main() {
  run(1, "matrix-norm sandwich 1/2 <= ||x||_M / ||x||_a <= 2, 1000 instances, n = N in 2..6", [] {
    CounterRng rng(1001);
    int bad = 0;
    Band band;
    for (int k = 0; k < 1000; ++k) {
      const std::size_t n = 2 + static_cast<std::size_t>(k) % 5;
      const auto a = random_decreasing_matrix(rng, n);
      const auto s = lemma_matrixnorm_check(a, gaussian_vector(rng, n), 1e-8);
      if (!s.passed) ++bad;
      band.add(s.ratio);
    }
    return std::pair{bad == 0, fmt("failures %.0f, ratio range [%.4f, ", bad, band.lo) +
                                   fmt("%.4f]", band.hi)};
  });

  run(2, "Khintchine sandwich by enumeration, 1000 instances, n in 2..5", [] {
    CounterRng rng(1002);
    int bad = 0;
    Band band;
    for (int k = 0; k < 1000; ++k) {
      const std::size_t n = 2 + static_cast<std::size_t>(k) % 4;
      const auto s = khintchine_sandwich_check(random_decreasing_matrix(rng, n), gaussian_vector(rng, n));
      if (!s.passed) ++bad;
      band.add(s.psi / s.ave_l2);
    }
    return std::pair{bad == 0, fmt("failures %.0f, psi/ave range [%.4f, ", bad, band.lo) +
                                   fmt("%.4f]", band.hi)};
  });

  run(3, "ave_l2 / Luxemburg norm of the matrix system, n in 2..7, 500 x per n: c2/c1 <= 20, stable", [] {
    std::vector<Band> bands;
    for (std::size_t n = 2; n <= 7; ++n) {
      CounterRng rng(1003, n);
      Band band;
      for (int k = 0; k < 500; ++k) {
        const auto a = random_decreasing_matrix(rng, n);
        const auto s = functions_from_matrix(a);
        const auto x = gaussian_vector(rng, n);
        band.add(ave_l2(a, x, AverageMode::exact).value / luxemburg_norm(s, x));
      }
      bands.push_back(band);
    }
    bool ok = stable(bands);
    for (const auto& b : bands) ok = ok && b.spread() <= 20.0;
    return std::pair{ok, describe(bands, 2)};
  });

  run(4, "ave_l2 / Luxemburg norm for mixed power systems p in {1.2,1.5,1.8}, n in 3..6: same band test", [] {
    std::vector<Band> bands;
    for (std::size_t n = 3; n <= 6; ++n) {
      const auto s = power_system(n, kMixed);
      const auto a = matrix_from_functions(s, n, config(n)).matrix;
      CounterRng rng(1004, n);
      Band band;
      for (int k = 0; k < 500; ++k) {
        const auto x = gaussian_vector(rng, n);
        band.add(ave_l2(a, x, AverageMode::exact).value / luxemburg_norm(s, x));
      }
      bands.push_back(band);
    }
    bool ok = stable(bands);
    for (const auto& b : bands) ok = ok && b.spread() <= 20.0;
    return std::pair{ok, describe(bands, 3)};
  });

  run(5, "reconstruction identity on 64 points: power family <= 1e-6, H(t) = t at machine precision", [] {
    std::vector<double> grid;
    for (int k = 1; k <= 64; ++k) grid.push_back(k / 64.0);
    double worst = 0.0;
    for (double p : kMixed) {
      const auto h = HFunction::from_orlicz(power_orlicz(p));
      worst = std::max(worst, h_reconstruct_check(h, FProfile(h, config(4)), grid));
    }
    const double flat =
        h_reconstruct_check(HFunction::identity(), FProfile(HFunction::identity(), config(4)), grid);
    return std::pair{worst <= 1e-6 && flat <= 8.0 * DBL_EPSILON,
                     fmt("power %.3g, identity %.3g", worst, flat)};
  });

  run(6, "constant matrix knots equal sqrt(l/n) for n <= 64 within 1e-12", [] {
    double worst = 0.0;
    for (std::size_t n = 1; n <= 64; ++n) {
      const auto v = conjugate_inverse_knots(WeightMatrix::constant(n, 1.0));
      for (const auto& row : v)
        for (std::size_t l = 1; l <= n; ++l)
          worst = std::max(worst, std::abs(row[l - 1] - std::sqrt(static_cast<double>(l) / static_cast<double>(n))));
    }
    return std::pair{worst <= 1e-12, fmt("max error %.3g", worst)};
  });

  run(7, "round trip: constant matrix fixed within 1e-6, power-family constants within [1/4, 4]", [] {
    double fixed_err = 0.0;
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto r = roundtrip_check(WeightMatrix::constant(n, 1.0), config(n));
      for (const auto& row : r.reconstructed_matrix)
        for (double e : row) fixed_err = std::max(fixed_err, std::abs(e - 1.0));
      fixed_err = std::max({fixed_err, std::abs(r.equivalence.c_low - 1.0), std::abs(r.equivalence.c_high - 1.0)});
    }
    Band band;
    for (std::size_t n = 3; n <= 6; ++n) {
      std::vector<std::vector<double>> families{{1.2}, {1.5}, {1.8}, kMixed};
      for (const auto& ps : families) {
        const auto a = matrix_from_functions(power_system(n, ps), n, config(n)).matrix;
        const auto r = roundtrip_check(a, config(n));
        band.add(r.equivalence.c_low);
        band.add(r.equivalence.c_high);
      }
    }
    const bool ok = fixed_err <= 1e-6 && band.lo >= 0.25 && band.hi <= 4.0;
    return std::pair{ok, fmt("fixed-point error %.3g, power constants [%.4f, ", fixed_err, band.lo) +
                             fmt("%.4f]", band.hi)};
  });

  run(8, "two-permutation max average / top-n^2 mean, n in 2..5, 200 instances each: bounded, stable", [] {
    std::vector<Band> bands;
    Band all;
    for (std::size_t n = 2; n <= 5; ++n) {
      CounterRng rng(1008, n);
      Band band;
      for (int k = 0; k < 200; ++k) {
        const auto a = random_array3(rng, n);
        const double r = ave_max_two(a, AverageMode::exact).value / dra_sum_bound(a);
        band.add(r);
        all.add(r);
      }
      bands.push_back(band);
    }
    // documented band [1/4, 4]
    const bool ok = stable(bands) && all.lo >= 0.25 && all.hi <= 4.0;
    return std::pair{ok, describe(bands, 2)};
  });

  run(9, "greedy matrix norm = composition max on 500 instances; Monte-Carlo ave_l2 within 4 SE on >= 99%", [] {
    CounterRng rng(1009);
    int mismatches = 0;
    for (int k = 0; k < 500; ++k) {
      const std::size_t n = 1 + rng.below(4);
      const std::size_t big_n = n + rng.below(5 - n);
      std::vector<std::vector<double>> rows(n);
      for (auto& r : rows) {
        r.resize(big_n);
        for (double& e : r) e = static_cast<double>(1 + rng.below(64)) / 8.0;
        std::sort(r.rbegin(), r.rend());
      }
      const auto a = WeightMatrix::from_rows(rows);
      std::vector<double> x(n);
      for (double& e : x) e = (static_cast<double>(rng.below(33)) - 16.0) / 4.0;
      if (matrix_norm_a(a, x) != brute_matrix_norm(a, x)) ++mismatches;
    }
    int inside = 0;
    int runs = 0;
    for (std::size_t n = 2; n <= 7; ++n) {
      for (int k = 0; k < 50; ++k) {
        const auto a = random_decreasing_matrix(rng, n);
        const auto x = gaussian_vector(rng, n);
        const double exact = ave_l2(a, x, AverageMode::exact).value;
        const auto mc = ave_l2(a, x, AverageMode::monte_carlo,
                               {kDefaultSamples, CounterRng::derive(1009, n * 100 + static_cast<std::size_t>(k))});
        ++runs;
        if (std::abs(mc.value - exact) <= 4.0 * mc.standard_error) ++inside;
      }
    }
    const double share = static_cast<double>(inside) / runs;
    return std::pair{mismatches == 0 && share >= 0.99,
                     fmt("mismatches %.0f, within 4 SE %.4f", mismatches, share)};
  });

  run(10, "norm axioms on 1000 random triples for the Luxemburg norm and the matrix norm", [] {
    CounterRng rng(1010);
    int bad = 0;
    for (int k = 0; k < 1000; ++k) {
      const std::size_t n = 1 + rng.below(6);
      std::vector<OrliczFunction> fs;
      for (std::size_t i = 0; i < n; ++i) {
        if (rng.below(2) == 0)
          fs.push_back(OrliczFunction::power(1.1 + 2.0 * rng.uniform(), 0.2 + rng.uniform()));
        else
          fs.push_back(OrliczFunction::piecewise(testing::random_pwa(rng, 3)));
      }
      const MusielakSystem s(fs);
      const auto a = random_decreasing_matrix(rng, n, n + rng.below(3));
      const auto x = gaussian_vector(rng, n);
      const auto y = gaussian_vector(rng, n);
      const double lambda = 4.0 * rng.normal();
      std::vector<double> sum(n), scaled(n);
      for (std::size_t i = 0; i < n; ++i) {
        sum[i] = x[i] + y[i];
        scaled[i] = lambda * x[i];
      }
      const double lx = luxemburg_norm(s, x);
      const double ly = luxemburg_norm(s, y);
      if (std::abs(luxemburg_norm(s, scaled) - std::abs(lambda) * lx) > 2.0 * kNormTolerance * std::abs(lambda) * lx)
        ++bad;
      if (luxemburg_norm(s, sum) > lx + ly + 3.0 * kNormTolerance * (lx + ly)) ++bad;
      const double ax = matrix_norm_a(a, x);
      const double ay = matrix_norm_a(a, y);
      if (std::abs(matrix_norm_a(a, scaled) - std::abs(lambda) * ax) > 1e-14 * std::abs(lambda) * ax) ++bad;
      if (matrix_norm_a(a, sum) > (ax + ay) * (1.0 + 1e-14)) ++bad;
    }
    return std::pair{bad == 0, fmt("violations %.0f", bad)};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
