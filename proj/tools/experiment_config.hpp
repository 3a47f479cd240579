#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orlicz/json_io.hpp"

namespace orlicz::cli {

/// Bad config or flags; the CLI exits with status 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One campaign definition, read from a JSON file.
struct ExperimentConfig {
  std::string command;
  std::vector<std::size_t> dimensions;
  std::string family = "random-decreasing";  // constant | random-decreasing | power
  std::vector<double> exponents{1.2, 1.5, 1.8};
  std::size_t instances = 100;
  std::size_t samples = 100000;  // Monte-Carlo samples per average
  std::string mode = "exact";
  std::uint64_t seed = 0;
  double tolerance = 1e-8;        // slack of the exact sandwiches
  double band_spread = 20.0;      // largest admissible c_high / c_low
  double band_stability = 0.25;   // band for n+1 inside the band for n widened by this
  double roundtrip_band = 4.0;    // round-trip constants within [1/b, b]
  double distortion_stability = 0.5;
  std::size_t directions = 2000;
  std::vector<std::string> campaigns;
  std::optional<Json> matrix;  // explicit input matrix for construct / roundtrip
  std::string out = ".";

  Json to_json() const;
};

/// Parses and validates; messages name the key and its line in `text`.
ExperimentConfig parse_config(const std::string& text, const std::string& origin);
ExperimentConfig load_config(const std::string& path);

/// Refuses sweeps beyond the exact-mode limits before anything runs.
void check_limits(const ExperimentConfig& config);

inline const std::vector<std::string> kCommands{"construct",     "verify-thm1",   "verify-thm2",
                                                "roundtrip",     "lemma-oracles", "embed-report"};
inline const std::vector<std::string> kCampaigns{"matrix-norm-sandwich", "matrix-norm-greedy",
                                                 "max-average", "khintchine", "b-vector"};

}  // namespace orlicz::cli
