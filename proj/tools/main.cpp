#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>

#include "campaigns.hpp"
#include "orlicz/errors.hpp"

namespace fs = std::filesystem;
using namespace orlicz;
using namespace orlicz::cli;

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

unsigned resolve_threads(const std::optional<unsigned>& flag) {
  if (flag) return std::max(*flag, 1u);
  if (const char* env = std::getenv("ORLICZ_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw UsageError("ORLICZ_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return std::max(std::thread::hardware_concurrency(), 1u);
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Musielak-Orlicz norm constructions and checks"};
  app.require_subcommand(1);
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<unsigned> threads;
  std::string format = "both";
  app.add_option("--config", config_path, "JSON experiment config")->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "master seed, overrides the config");
  app.add_option("--out", out_dir, "output directory, overrides the config");
  app.add_option("--threads", threads, "worker threads (default ORLICZ_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "both"}));
  const std::map<std::string, std::string> about{
      {"construct", "build matrices, knots and Musielak systems"},
      {"verify-thm1", "ave_l2 against the Luxemburg norm of the system built from a matrix"},
      {"verify-thm2", "ave_l2 against power systems through the matrix construction"},
      {"roundtrip", "matrix -> system -> matrix equivalence constants"},
      {"lemma-oracles", "exact sandwiches and empirical bands of the combinatorial oracles"},
      {"embed-report", "distortion witness of the L1 embedding"}};
  for (const auto& name : kCommands) app.add_subcommand(name, about.at(name))->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  ExperimentConfig config;
  unsigned workers = 1;
  try {
    if (!config_path.empty()) config = load_config(config_path);
    if (!config.command.empty() && config.command != command)
      throw UsageError(config_path + ": \"command\" is '" + config.command + "' but the subcommand is '" +
                       command + "'");
    config.command = command;
    if (config.campaigns.empty()) config.campaigns = kCampaigns;
    if (seed) config.seed = *seed;
    if (out_dir) config.out = *out_dir;
    workers = resolve_threads(threads);
    check_limits(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  CampaignOutput output;
  try {
    output = run_campaign(config, workers);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    const fs::path dir(config.out);
    fs::create_directories(dir);
    if (format != "csv") {
      Json doc;
      doc["command"] = command;
      doc["version"] = ORLICZ_VERSION;
      doc["timestamp"] = utc_timestamp();
      doc["seed"] = config.seed;
      doc["config"] = config.to_json();
      doc["results"] = output.results;
      doc["passed"] = output.passed;
      write_file(dir / (command + ".json"), doc.dump(2) + "\n");
    }
    if (format != "json") {
      for (const auto& [suffix, rows] : output.tables) {
        const std::string name = suffix.empty() ? command : command + "-" + suffix;
        std::ofstream csv(dir / (name + ".csv"));
        if (!csv) throw std::runtime_error("cannot write " + (dir / (name + ".csv")).string());
        write_ratio_csv(csv, rows);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  std::cout << command << ": " << (output.passed ? "all checks passed" : "some checks failed") << '\n';
  return output.passed ? 0 : 2;
}
