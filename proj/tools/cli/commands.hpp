#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "spreadbench/epidemic.hpp"
#include "spreadbench/graph.hpp"

namespace spreadbench::cli {

using WrittenFiles = std::vector<std::filesystem::path>;

/// Each command validates `config`, writes its CSV outputs into `config.out`
/// and returns their paths. Progress goes to `log`. On error nothing the
/// command wrote is left behind (cached simulations excepted).
WrittenFiles cmd_stats(const ExperimentConfig& config, std::ostream& log);
WrittenFiles cmd_centrality(const ExperimentConfig& config, std::ostream& log);
WrittenFiles cmd_spread(const ExperimentConfig& config, std::ostream& log);
WrittenFiles cmd_oracle(const ExperimentConfig& config, std::ostream& log);
WrittenFiles cmd_imprecision(const ExperimentConfig& config, std::ostream& log);

WrittenFiles run_command(Command command, const ExperimentConfig& config, std::ostream& log);

struct LoadedNetwork {
  std::string name;
  Graph graph;  // greatest connected component of the file
};

/// Parses the edge list, extracts the GCC and logs node/edge counts before and after.
LoadedNetwork load_network(const std::string& path, const std::string& name, std::ostream& log);

/// Caches spread estimates under `<directory>/spread-<key>.csv`, keyed by
/// graph content, beta, runs and seed. Cached files round-trip every double
/// exactly, so a cache hit is indistinguishable from recomputation.
class SpreadCache {
 public:
  SpreadCache(std::filesystem::path directory, bool enabled);

  SpreadEstimate get(const Graph& g, InfectionProbability beta, std::size_t runs, std::uint64_t seed,
                     unsigned workers, std::ostream& log);

  static std::string key(const Graph& g, InfectionProbability beta, std::size_t runs, std::uint64_t seed);

 private:
  std::filesystem::path directory_;
  bool enabled_;
};

/// Reads `node_label,score,...` rows; every node of `g` must have a score.
std::vector<double> read_scores(const std::string& path, const Graph& g);

}  // namespace spreadbench::cli
