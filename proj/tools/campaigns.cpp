#include "campaigns.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "orlicz/averages.hpp"
#include "orlicz/constructions.hpp"
#include "orlicz/embedding.hpp"
#include "orlicz/families.hpp"
#include "orlicz/matrix_norm.hpp"

namespace orlicz::cli {
namespace {

// Stream tags keep the campaigns' random streams apart.
enum Tag : std::uint64_t {
  kMatrixSystem = 1,
  kPowerSystem,
  kRoundtrip,
  kConstruct,
  kSandwich,
  kGreedy,
  kMaxAverage,
  kKhintchine,
  kBVector,
  kEmbed,
};

CounterRng instance_rng(const ExperimentConfig& c, Tag tag, std::size_t n, std::size_t i) {
  return CounterRng(c.seed, CounterRng::derive(CounterRng::derive(tag, n), i));
}

/// body(k) for k < count on `threads` workers; rethrows the first failure.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1u), count));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct Band {
  double lo = INFINITY;
  double hi = 0.0;
  void add(double r) {
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  bool empty() const { return hi == 0.0; }
};

Json band_json(const Band& b) {
  Json j;
  j["c_low"] = b.lo;
  j["c_high"] = b.hi;
  j["spread"] = b.hi / b.lo;
  return j;
}

// Adds per-n bands and the spread / stability verdicts to `out`.
void summarize_bands(const ExperimentConfig& c, const std::vector<std::size_t>& dims,
                     const std::vector<Band>& bands, CampaignOutput& out, Json& where) {
  Json per_n = Json::array();
  bool spread_ok = true;
  bool stable = true;
  for (std::size_t k = 0; k < bands.size(); ++k) {
    if (bands[k].empty()) continue;
    Json b = band_json(bands[k]);
    b["n"] = dims[k];
    spread_ok = spread_ok && bands[k].hi / bands[k].lo <= c.band_spread;
    if (k > 0 && !bands[k - 1].empty())
      stable = stable && bands[k].lo >= (1.0 - c.band_stability) * bands[k - 1].lo &&
               bands[k].hi <= (1.0 + c.band_stability) * bands[k - 1].hi;
    per_n.push_back(std::move(b));
  }
  where["bands"] = per_n;
  where["spread_pass"] = spread_ok;
  where["stability_pass"] = stable;
  out.passed = out.passed && spread_ok && stable;
}

AverageMode mode_of(const ExperimentConfig& c) { return average_mode_from_string(c.mode); }

WeightMatrix family_matrix(const ExperimentConfig& c, std::size_t n, CounterRng& rng) {
  if (c.family == "constant") return WeightMatrix::constant(n, 1.0);
  if (c.family == "power") {
    ConstructionConfig cfg;
    cfg.n = n;
    return matrix_from_functions(power_system(n, c.exponents), n, cfg).matrix;
  }
  return random_decreasing_matrix(rng, n);
}

// Ratio tables over (a, x) instances: lhs / rhs per instance, banded per n.
using Instance = std::function<RatioRow(std::size_t n, std::size_t i)>;

std::vector<Band> ratio_sweep(const ExperimentConfig& c, unsigned threads, const Instance& instance,
                              std::vector<RatioRow>& table) {
  std::vector<Band> bands;
  std::size_t id = 0;
  for (std::size_t n : c.dimensions) {
    std::vector<RatioRow> rows(c.instances);
    parallel_for(c.instances, threads, [&](std::size_t i) { rows[i] = instance(n, i); });
    Band band;
    for (auto& r : rows) {
      r.instance_id = id++;
      band.add(r.ratio);
      table.push_back(r);
    }
    bands.push_back(band);
  }
  return bands;
}

CampaignOutput verify_thm1(const ExperimentConfig& c, unsigned threads) {
  CampaignOutput out;
  auto& table = out.tables[""];
  const AverageMode mode = mode_of(c);
  // deterministic families share one matrix per n
  std::map<std::size_t, WeightMatrix> shared;
  if (c.family != "random-decreasing")
    for (std::size_t n : c.dimensions) {
      CounterRng unused(0);
      shared.emplace(n, family_matrix(c, n, unused));
    }
  const auto bands = ratio_sweep(c, threads, [&](std::size_t n, std::size_t i) {
    CounterRng rng = instance_rng(c, kMatrixSystem, n, i);
    const WeightMatrix a = shared.empty() ? random_decreasing_matrix(rng, n) : shared.at(n);
    const auto system = functions_from_matrix(a);
    const auto x = gaussian_vector(rng, n);
    RatioRow r;
    r.n = n;
    r.lhs = ave_l2(a, x, mode, {c.samples, rng()}).value;
    r.rhs = luxemburg_norm(system, x);
    r.ratio = r.lhs / r.rhs;
    return r;
  }, table);
  out.results["quantity"] = "ave_l2(a, x) / luxemburg_norm(system of a, x)";
  summarize_bands(c, c.dimensions, bands, out, out.results);
  return out;
}

CampaignOutput verify_thm2(const ExperimentConfig& c, unsigned threads) {
  CampaignOutput out;
  auto& table = out.tables[""];
  const AverageMode mode = mode_of(c);
  // one construction per n, shared by its instances
  std::vector<WeightMatrix> matrices;
  std::vector<MusielakSystem> systems;
  Json constructions = Json::array();
  for (std::size_t n : c.dimensions) {
    ConstructionConfig cfg;
    cfg.n = n;
    systems.push_back(power_system(n, c.exponents));
    const auto built = matrix_from_functions(systems.back(), n, cfg);
    matrices.push_back(built.matrix);
    double worst = 0.0;
    for (const auto& row : built.errors)
      for (double e : row) worst = std::max(worst, e);
    Json j;
    j["n"] = n;
    j["matrix"] = to_json(built.matrix);
    j["max_quadrature_error"] = worst;
    constructions.push_back(std::move(j));
  }
  std::size_t index = 0;
  std::vector<Band> bands;
  std::size_t id = 0;
  for (std::size_t n : c.dimensions) {
    const auto& a = matrices[index];
    const auto& s = systems[index];
    ++index;
    std::vector<RatioRow> rows(c.instances);
    parallel_for(c.instances, threads, [&](std::size_t i) {
      CounterRng rng = instance_rng(c, kPowerSystem, n, i);
      const auto x = gaussian_vector(rng, n);
      RatioRow& r = rows[i];
      r.n = n;
      r.lhs = ave_l2(a, x, mode, {c.samples, rng()}).value;
      r.rhs = luxemburg_norm(s, x);
      r.ratio = r.lhs / r.rhs;
    });
    Band band;
    for (auto& r : rows) {
      r.instance_id = id++;
      band.add(r.ratio);
      table.push_back(r);
    }
    bands.push_back(band);
  }
  out.results["quantity"] = "ave_l2(a, x) / luxemburg_norm(power system, x), a built from the system";
  out.results["constructions"] = constructions;
  summarize_bands(c, c.dimensions, bands, out, out.results);
  return out;
}

CampaignOutput construct(const ExperimentConfig& c, unsigned threads) {
  CampaignOutput out;
  std::vector<WeightMatrix> inputs;
  std::vector<std::size_t> dims = c.dimensions;
  if (c.matrix) {
    inputs.push_back(matrix_from_json(*c.matrix));
    if (!inputs.back().square()) throw UsageError("\"matrix\": construct needs a square matrix");
    dims = {inputs.back().rows()};
  }
  std::vector<Json> entries(dims.size());
  std::vector<char> ok(dims.size(), 1);
  parallel_for(dims.size(), threads, [&](std::size_t k) {
    const std::size_t n = dims[k];
    Json j;
    j["n"] = n;
    ConstructionConfig cfg;
    cfg.n = n;
    Json diag;
    WeightMatrix a = WeightMatrix::constant(1, 1.0);
    if (c.matrix) {
      a = inputs.front();
    } else if (c.family == "power") {
      const auto s = power_system(n, c.exponents);
      const auto built = matrix_from_functions(s, n, cfg);
      a = built.matrix;
      double quad = 0.0;
      for (const auto& row : built.errors)
        for (double e : row) quad = std::max(quad, e);
      std::vector<double> grid;
      for (int t = 1; t <= 64; ++t) grid.push_back(t / 64.0);
      double recon = 0.0;
      for (double p : c.exponents) {
        const auto h = HFunction::from_orlicz(power_orlicz(p));
        recon = std::max(recon, h_reconstruct_check(h, FProfile(h, cfg), grid));
      }
      diag["max_quadrature_error"] = quad;
      diag["max_reconstruction_error"] = recon;
      j["power_system"] = to_json(s);
    } else {
      CounterRng rng = instance_rng(c, kConstruct, n, 0);
      a = family_matrix(c, n, rng);
    }
    const auto knots = conjugate_inverse_knots(a);
    if (c.family == "constant" && !c.matrix) {
      double worst = 0.0;
      for (const auto& row : knots)
        for (std::size_t l = 1; l <= n; ++l)
          worst = std::max(worst, std::abs(row[l - 1] - std::sqrt(static_cast<double>(l) / static_cast<double>(n))));
      diag["max_knot_error_vs_sqrt"] = worst;
      ok[k] = worst <= 1e-12;
    }
    j["matrix"] = to_json(a);
    j["knots"] = knots;
    j["system"] = to_json(functions_from_matrix(a));
    diag["rows_nonincreasing"] = true;  // enforced by WeightMatrix
    j["diagnostics"] = diag;
    entries[k] = std::move(j);
  });
  out.results["constructions"] = Json::array();
  for (std::size_t k = 0; k < dims.size(); ++k) {
    out.results["constructions"].push_back(std::move(entries[k]));
    out.passed = out.passed && ok[k];
  }
  return out;
}

CampaignOutput roundtrip(const ExperimentConfig& c, unsigned threads) {
  CampaignOutput out;
  auto& table = out.tables[""];
  struct Job {
    std::size_t n;
    std::size_t i;
  };
  std::vector<Job> jobs;
  if (c.matrix) {
    jobs.push_back({matrix_from_json(*c.matrix).rows(), 0});
  } else {
    for (std::size_t n : c.dimensions) {
      const std::size_t count = c.family == "random-decreasing" ? c.instances : 1;
      for (std::size_t i = 0; i < count; ++i) jobs.push_back({n, i});
    }
  }
  std::vector<RoundtripReport> reports(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t k) {
    const auto [n, i] = jobs[k];
    CounterRng rng = instance_rng(c, kRoundtrip, n, i);
    const WeightMatrix a = c.matrix ? matrix_from_json(*c.matrix) : family_matrix(c, n, rng);
    ConstructionConfig cfg;
    cfg.n = n;
    reports[k] = roundtrip_check(a, cfg);
  });
  Json list = Json::array();
  Band all;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const auto& r = reports[k];
    Json j;
    j["instance_id"] = k;
    j["n"] = jobs[k].n;
    j["equivalence"] = to_json(r.equivalence);
    j["original_knots"] = r.original_knots;
    j["reconstructed_knots"] = r.reconstructed_knots;
    double residual = 0.0;
    for (const auto& f : r.fits) residual = std::max(residual, f.max_relative_residual);
    j["max_fit_residual"] = residual;
    list.push_back(std::move(j));
    all.add(r.equivalence.c_low);
    all.add(r.equivalence.c_high);
    for (std::size_t row = 0; row < r.original_knots.size(); ++row)
      for (std::size_t l = 0; l < r.original_knots[row].size(); ++l)
        table.push_back({k, jobs[k].n, r.reconstructed_knots[row][l], r.original_knots[row][l],
                         r.reconstructed_knots[row][l] / r.original_knots[row][l]});
  }
  out.results["instances"] = list;
  if (!all.empty()) {
    out.results["overall"] = band_json(all);
    bool ok = all.lo >= 1.0 / c.roundtrip_band && all.hi <= c.roundtrip_band;
    if (c.family == "constant" && !c.matrix) ok = ok && all.lo >= 1.0 - 1e-6 && all.hi <= 1.0 + 1e-6;
    out.results["pass"] = ok;
    out.passed = ok;
  }
  return out;
}

// Brute-force maximum over budgets l_1 + ... + l_n <= N.
double composition_max(const WeightMatrix& a, std::span<const double> x) {
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
    for (std::size_t k = 0; k <= left; ++k) {
      l[i] = k;
      walk(i + 1, left - k);
    }
  };
  walk(0, a.cols());
  return best;
}

CampaignOutput lemma_oracles(const ExperimentConfig& c, unsigned threads) {
  CampaignOutput out;
  const AverageMode mode = mode_of(c);
  for (const auto& name : c.campaigns) {
    auto& table = out.tables[name];
    Json summary;
    std::size_t failures = 0;
    std::mutex m;
    auto fail = [&] {
      std::lock_guard lock(m);
      ++failures;
    };
    std::vector<Band> bands;
    if (name == "matrix-norm-sandwich") {
      bands = ratio_sweep(c, threads, [&](std::size_t n, std::size_t i) {
        CounterRng rng = instance_rng(c, kSandwich, n, i);
        const auto a = random_decreasing_matrix(rng, n);
        const auto s = lemma_matrixnorm_check(a, gaussian_vector(rng, n), c.tolerance);
        if (!s.passed) fail();
        return RatioRow{0, n, s.norm_musielak, s.norm_a, s.ratio};
      }, table);
      summary["claim"] = "norm_a / 2 <= luxemburg norm <= 2 norm_a";
    } else if (name == "khintchine") {
      bands = ratio_sweep(c, threads, [&](std::size_t n, std::size_t i) {
        CounterRng rng = instance_rng(c, kKhintchine, n, i);
        const auto s = khintchine_sandwich_check(random_decreasing_matrix(rng, n), gaussian_vector(rng, n));
        if (!s.passed) fail();
        return RatioRow{0, n, s.psi, s.ave_l2, s.ave_l2 > 0.0 ? s.psi / s.ave_l2 : 1.0};
      }, table);
      summary["claim"] = "ave_l2 / sqrt(2) <= psi <= ave_l2";
    } else if (name == "matrix-norm-greedy") {
      bands = ratio_sweep(c, threads, [&](std::size_t n, std::size_t i) {
        // dyadic data keep every sum exact
        CounterRng rng = instance_rng(c, kGreedy, n, i);
        const std::size_t big_n = n + rng.below(3);
        std::vector<std::vector<double>> rows(n, std::vector<double>(big_n));
        for (auto& row : rows) {
          for (double& e : row) e = static_cast<double>(1 + rng.below(64)) / 8.0;
          std::sort(row.rbegin(), row.rend());
        }
        const auto a = WeightMatrix::from_rows(rows);
        std::vector<double> x(n);
        for (double& e : x) e = (static_cast<double>(rng.below(33)) - 16.0) / 4.0;
        const double greedy = matrix_norm_a(a, x);
        const double brute = composition_max(a, x);
        if (greedy != brute) fail();
        return RatioRow{0, n, greedy, brute, brute > 0.0 ? greedy / brute : 1.0};
      }, table);
      summary["claim"] = "greedy matrix norm equals the composition maximum exactly";
    } else if (name == "max-average") {
      bands = ratio_sweep(c, threads, [&](std::size_t n, std::size_t i) {
        CounterRng rng = instance_rng(c, kMaxAverage, n, i);
        const auto a = random_array3(rng, n);
        const double lhs = ave_max_two(a, mode, {c.samples, rng()}).value;
        const double rhs = dra_sum_bound(a);
        return RatioRow{0, n, lhs, rhs, lhs / rhs};
      }, table);
      summary["claim"] = "Ave max_i |a(i, pi(i), sigma(i))| comparable to the top-n^2 mean";
      summarize_bands(c, c.dimensions, bands, out, summary);
    } else if (name == "b-vector") {
      bands = ratio_sweep(c, threads, [&](std::size_t n, std::size_t i) {
        CounterRng rng = instance_rng(c, kBVector, n, i);
        const auto y = gaussian_vector(rng, n);
        const double lhs = ave_max_vector(build_b_vector(n), y, mode, {c.samples, rng()}).value;
        double l2 = 0.0;
        for (double v : y) l2 += v * v;
        return RatioRow{0, n, lhs, std::sqrt(l2), lhs / std::sqrt(l2)};
      }, table);
      summary["claim"] = "Ave max_k |y_k b_sigma(k)| comparable to ||y||_2";
      summarize_bands(c, c.dimensions, bands, out, summary);
    }
    const bool exact_claim = name == "matrix-norm-sandwich" || name == "khintchine" || name == "matrix-norm-greedy";
    if (exact_claim) {
      Json per_n = Json::array();
      for (std::size_t k = 0; k < bands.size(); ++k) {
        if (bands[k].empty()) continue;
        Json b = band_json(bands[k]);
        b["n"] = c.dimensions[k];
        per_n.push_back(std::move(b));
      }
      summary["bands"] = per_n;
      summary["failures"] = failures;
      summary["pass"] = failures == 0;
      out.passed = out.passed && failures == 0;
    }
    summary["instances"] = table.size();
    out.results[name] = summary;
  }
  return out;
}

CampaignOutput embed_report(const ExperimentConfig& c, unsigned threads) {
  CampaignOutput out;
  auto& table = out.tables[""];
  std::vector<DistortionReport> reports(c.dimensions.size());
  parallel_for(c.dimensions.size(), threads, [&](std::size_t k) {
    const std::size_t n = c.dimensions[k];
    CounterRng rng = instance_rng(c, kEmbed, n, 0);
    WeightMatrix a = WeightMatrix::constant(1, 1.0);
    std::optional<MusielakSystem> s;
    if (c.family == "power") {
      s.emplace(power_system(n, c.exponents));
      ConstructionConfig cfg;
      cfg.n = n;
      a = matrix_from_functions(*s, n, cfg).matrix;
    } else {
      a = family_matrix(c, n, rng);
      s.emplace(functions_from_matrix(a));
    }
    DistortionOptions opts;
    opts.gaussian_directions = c.directions;
    opts.seed = rng();
    opts.psi_samples = c.samples;
    reports[k] = distortion_estimate(*s, a, opts);
  });
  Json list = Json::array();
  bool stable = true;
  std::size_t id = 0;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    Json j = to_json(reports[k]);
    j["n"] = c.dimensions[k];
    list.push_back(std::move(j));
    if (k > 0)
      stable = stable && std::abs(reports[k].distortion / reports[k - 1].distortion - 1.0) <= c.distortion_stability;
    for (double r : reports[k].ratios) table.push_back({id++, c.dimensions[k], r, 1.0, r});
  }
  out.results["reports"] = list;
  out.results["stability_pass"] = stable;
  out.passed = stable;
  return out;
}

}  // namespace

CampaignOutput run_campaign(const ExperimentConfig& config, unsigned threads) {
  const auto& cmd = config.command;
  if (cmd == "construct") return construct(config, threads);
  if (cmd == "verify-thm1") return verify_thm1(config, threads);
  if (cmd == "verify-thm2") return verify_thm2(config, threads);
  if (cmd == "roundtrip") return roundtrip(config, threads);
  if (cmd == "lemma-oracles") return lemma_oracles(config, threads);
  if (cmd == "embed-report") return embed_report(config, threads);
  throw UsageError("unknown command '" + cmd + "'");
}

}  // namespace orlicz::cli
