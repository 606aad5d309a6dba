#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spreadbench/epidemic.hpp"
#include "spreadbench/graph.hpp"

namespace spreadbench {

/// Largest edge count accepted by the exhaustive enumeration (2^24 subsets).
inline constexpr std::size_t kOracleMaxEdges = 24;

struct ExactSpread {
  NodeId node = 0;
  InfectionProbability beta = InfectionProbability::from_fraction(0.0);
  double value = 0.0;
};

/// Expected size of the percolation cluster containing each node, summed
/// over all 2^|E| live/dead edge states with weight beta^live (1-beta)^dead.
/// Equals the expected SIR outbreak size. One pass serves every seed.
std::vector<ExactSpread> exact_all_spreads(const Graph& g, InfectionProbability beta, unsigned workers = 1);

ExactSpread exact_influence_spread(const Graph& g, NodeId node, InfectionProbability beta);

/// Total probability mass of the enumeration; 1 up to rounding.
double percolation_weight_total(std::size_t edge_count, InfectionProbability beta);

/// Spread CSV layout with std_error 0 and runs 0.
std::string exact_spread_csv(const Graph& g, const std::vector<ExactSpread>& spreads);

}  // namespace spreadbench
