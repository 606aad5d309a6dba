#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spreadbench/centrality.hpp"

namespace spreadbench::cli {

/// Effective settings for one command invocation. Every field maps to one
/// `key = value` line of the config file, one `SPREADBENCH_<KEY>`
/// environment variable and one command-line flag.
struct ExperimentConfig {
  std::vector<std::string> networks;  // edge-list paths
  std::vector<std::string> names;     // defaults to file stems
  std::vector<std::string> measures = {"all"};
  std::vector<double> beta_percent;
  std::vector<double> beta_multiple;
  std::vector<double> p_grid = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::string x = "p";  // "p" or "beta"
  double p = 5.0;       // fixed p for beta sweeps
  std::size_t runs = 1000;
  std::optional<std::uint64_t> seed;
  std::string out = ".";
  PageRankVariant pagerank_variant = PageRankVariant::damped;
  double damping = 0.85;
  unsigned workers = 0;  // 0: one per hardware thread
  std::optional<std::string> node;     // oracle: restrict output to one label
  std::vector<std::string> scores;     // injected measures, "name=path"
  std::vector<std::string> diff;       // imprecision differences, "a:b"
  bool cache = true;

  bool operator==(const ExperimentConfig&) const = default;
};

inline constexpr const char* kEnvPrefix = "SPREADBENCH_";

/// Keys accepted by apply_setting, in the order to_text writes them.
const std::vector<std::string>& config_keys();

/// Parses `value` for `key` into `config`. Throws ParseError on unknown keys
/// or malformed values.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);

/// Applies `key = value` lines; '#' starts a comment line.
void apply_config_text(ExperimentConfig& config, const std::string& text);
void apply_config_file(ExperimentConfig& config, const std::string& path);

/// Applies every SPREADBENCH_<KEY> variable that is set.
void apply_environment(ExperimentConfig& config);

/// One line per key; apply_config_text(to_text(c)) reproduces c.
std::string to_text(const ExperimentConfig& config);

enum class Command { stats, centrality, spread, oracle, imprecision };

/// Checks cross-field requirements for `command` (paths exist, seed given...).
void validate(const ExperimentConfig& config, Command command);

/// Expands "all" and checks every token. Unknown tokens raise an error
/// listing the valid ones.
std::vector<Measure> resolve_measures(const std::vector<std::string>& tokens);

}  // namespace spreadbench::cli
