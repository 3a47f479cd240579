#pragma once

#include <map>
#include <string>
#include <vector>

#include "experiment_config.hpp"
#include "orlicz/csv.hpp"
#include "orlicz/json_io.hpp"

namespace orlicz::cli {

struct CampaignOutput {
  Json results = Json::object();
  /// CSV tables by suffix; the empty suffix is the command's main table.
  std::map<std::string, std::vector<RatioRow>> tables;
  bool passed = true;
};

/// Runs `config.command`. Instances run on `threads` workers; the output
/// depends only on the config.
CampaignOutput run_campaign(const ExperimentConfig& config, unsigned threads);

}  // namespace orlicz::cli
