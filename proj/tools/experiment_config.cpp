#include "experiment_config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "orlicz/averages.hpp"
#include "orlicz/embedding.hpp"

namespace orlicz::cli {
namespace {

// 1-based line of the first occurrence of "key" in the raw text, 0 if absent.
std::size_t line_of(const std::string& text, const std::string& key) {
  const auto pos = text.find('"' + key + '"');
  if (pos == std::string::npos) return 0;
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

class Reader {
 public:
  Reader(const Json& j, const std::string& text, const std::string& origin)
      : j_(j), text_(text), origin_(origin) {}

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    std::ostringstream msg;
    msg << origin_;
    if (const auto line = line_of(text_, key)) msg << ':' << line;
    msg << ": \"" << key << "\": " << what;
    throw UsageError(msg.str());
  }

  const Json* find(const std::string& key) const {
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  void string(const std::string& key, std::string& out) const {
    if (const Json* v = find(key)) {
      if (!v->is_string()) fail(key, "expected a string");
      out = v->get<std::string>();
    }
  }

  void count(const std::string& key, std::size_t& out) const {
    if (const Json* v = find(key)) {
      if (!v->is_number_unsigned()) fail(key, "expected a non-negative integer");
      out = v->get<std::size_t>();
    }
  }

  void seed(const std::string& key, std::uint64_t& out) const {
    if (const Json* v = find(key)) {
      if (!v->is_number_unsigned()) fail(key, "expected an unsigned 64-bit integer");
      out = v->get<std::uint64_t>();
    }
  }

  void positive(const std::string& key, double& out) const {
    if (const Json* v = find(key)) {
      if (!v->is_number() || !(v->get<double>() > 0.0)) fail(key, "expected a positive number");
      out = v->get<double>();
    }
  }

  template <class T, class Check>
  void list(const std::string& key, std::vector<T>& out, Check check, const char* what) const {
    if (const Json* v = find(key)) {
      if (!v->is_array()) fail(key, "expected an array");
      out.clear();
      for (const auto& e : *v) {
        if (!check(e)) fail(key, what);
        out.push_back(e.template get<T>());
      }
    }
  }

 private:
  const Json& j_;
  const std::string& text_;
  const std::string& origin_;
};

bool one_of(const std::string& v, const std::vector<std::string>& allowed) {
  return std::find(allowed.begin(), allowed.end(), v) != allowed.end();
}

}  // namespace

Json ExperimentConfig::to_json() const {
  Json j;
  j["command"] = command;
  j["dimensions"] = dimensions;
  j["family"] = family;
  j["exponents"] = exponents;
  j["instances"] = instances;
  j["samples"] = samples;
  j["mode"] = mode;
  j["seed"] = seed;
  j["tolerance"] = tolerance;
  j["band_spread"] = band_spread;
  j["band_stability"] = band_stability;
  j["roundtrip_band"] = roundtrip_band;
  j["distortion_stability"] = distortion_stability;
  j["directions"] = directions;
  j["campaigns"] = campaigns;
  if (matrix) j["matrix"] = *matrix;
  return j;
}

ExperimentConfig parse_config(const std::string& text, const std::string& origin) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(origin + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError(origin + ": top level must be an object");

  static const std::vector<std::string> known{
      "command",        "dimensions",     "family",   "exponents",  "instances",
      "samples",        "mode",           "seed",     "tolerance",  "band_spread",
      "band_stability", "roundtrip_band", "distortion_stability",     "directions",
      "campaigns",      "matrix",         "out"};
  const Reader r(j, text, origin);
  for (const auto& item : j.items())
    if (!one_of(item.key(), known)) r.fail(item.key(), "unknown key");

  ExperimentConfig c;
  r.string("command", c.command);
  if (!c.command.empty() && !one_of(c.command, kCommands)) r.fail("command", "unknown command");
  r.list("dimensions", c.dimensions,
         [](const Json& e) { return e.is_number_unsigned() && e.get<std::size_t>() > 0; },
         "expected positive integers");
  r.string("family", c.family);
  if (!one_of(c.family, {"constant", "random-decreasing", "power"}))
    r.fail("family", "expected constant, random-decreasing or power");
  r.list("exponents", c.exponents,
         [](const Json& e) { return e.is_number() && e.get<double>() > 1.0 && e.get<double>() < 2.0; },
         "exponents must lie in (1, 2)");
  if (c.exponents.empty()) r.fail("exponents", "need at least one exponent");
  r.count("instances", c.instances);
  r.count("samples", c.samples);
  if (c.samples < 2) r.fail("samples", "need at least two samples");
  r.string("mode", c.mode);
  try {
    (void)average_mode_from_string(c.mode);
  } catch (const std::invalid_argument&) {
    r.fail("mode", "expected exact or monte-carlo");
  }
  r.seed("seed", c.seed);
  r.positive("tolerance", c.tolerance);
  r.positive("band_spread", c.band_spread);
  r.positive("band_stability", c.band_stability);
  r.positive("roundtrip_band", c.roundtrip_band);
  if (c.roundtrip_band < 1.0) r.fail("roundtrip_band", "must be at least 1");
  r.positive("distortion_stability", c.distortion_stability);
  r.count("directions", c.directions);
  r.list("campaigns", c.campaigns,
         [](const Json& e) { return e.is_string() && one_of(e.get<std::string>(), kCampaigns); },
         "unknown campaign");
  if (c.campaigns.empty()) c.campaigns = kCampaigns;
  if (const Json* m = r.find("matrix")) {
    try {
      (void)matrix_from_json(*m);
    } catch (const std::exception& e) {
      r.fail("matrix", e.what());
    }
    c.matrix = *m;
  }
  r.string("out", c.out);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(path + ": cannot open config");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path);
}

void check_limits(const ExperimentConfig& c) {
  const bool exact = c.mode == "exact";
  auto refuse = [&](std::size_t n, std::size_t limit, const std::string& what) {
    if (n > limit)
      throw UsageError("dimension " + std::to_string(n) + " exceeds the exact limit " +
                       std::to_string(limit) + " of " + what);
  };
  const bool uses_matrix = c.command == "construct" || c.command == "roundtrip";
  if (uses_matrix && c.matrix && !c.dimensions.empty())
    throw UsageError("\"matrix\" and \"dimensions\" are mutually exclusive");
  for (std::size_t n : c.dimensions) {
    if ((c.command == "verify-thm1" || c.command == "verify-thm2") && exact)
      refuse(n, kExactSingleLimit, "permutation averages");
    if (c.command == "lemma-oracles") {
      for (const auto& name : c.campaigns) {
        if (name == "khintchine") refuse(n, kExactSignedLimit, "the signed image norm");
        if (name == "max-average" && exact) refuse(n, kExactPairLimit, "two-permutation averages");
        if (name == "b-vector" && exact) refuse(n, kExactSingleLimit, "permutation averages");
        if (name == "matrix-norm-greedy") refuse(n, 6, "the composition enumeration");
      }
    }
  }
}

}  // namespace orlicz::cli
