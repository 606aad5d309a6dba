#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "spreadbench/graph.hpp"

namespace spreadbench {

/// Empirical degree distribution with its first two moments.
struct DegreeHistogram {
  std::map<std::size_t, std::size_t> counts;  // degree -> number of nodes
  std::size_t node_count = 0;
  double mean_degree = 0.0;    // <k>
  double second_moment = 0.0;  // <k^2>

  /// P(k); zero for degrees not present.
  double probability(std::size_t degree) const;

  /// Builds a histogram from explicit counts, computing the moments.
  static DegreeHistogram from_counts(std::map<std::size_t, std::size_t> counts);
};

DegreeHistogram degree_histogram(const Graph& g);

struct PowerLawFit {
  double lambda = 0.0;     // -slope of log P(k) against log k
  double r_squared = 0.0;  // squared correlation of the regression
};

/// Least-squares line through (log k, log P(k)) over k >= 1 with nonzero
/// count. Needs at least two such degrees.
PowerLawFit power_law_fit(const DegreeHistogram& h);

/// One row of the network summary table.
struct NetworkStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double density = 0.0;
  double beta_prime = 0.0;  // percent
  std::optional<PowerLawFit> power_law;  // empty when every node has the same degree
  double mean_degree = 0.0;
  double second_moment = 0.0;
  std::size_t max_shell = 0;
};

/// Fills every summary field. Expects a connected graph with at least one edge.
NetworkStats summary_stats(const Graph& g);

inline constexpr const char* kStatsCsvHeader =
    "name,nodes,edges,density,beta_prime,lambda,r_squared,mean_degree,second_moment,max_shell";

/// Header line plus one data row. Missing power-law fields are left empty.
std::string stats_csv(const std::string& name, const NetworkStats& stats);

}  // namespace spreadbench
