#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spreadbench/graph.hpp"
#include "spreadbench/random.hpp"
#include "spreadbench/stats.hpp"

namespace spreadbench {

/// Per-contact transmission probability, stored as a fraction in [0, 1].
/// User-facing values are percentages.
class InfectionProbability {
 public:
  static InfectionProbability from_fraction(double beta);
  static InfectionProbability from_percent(double percent) { return from_fraction(percent / 100.0); }

  double fraction() const noexcept { return beta_; }
  double percent() const noexcept { return beta_ * 100.0; }

 private:
  explicit InfectionProbability(double beta) noexcept : beta_(beta) {}
  double beta_;
};

struct EpidemicThreshold {
  double beta_prime = 0.0;  // fraction
  double beta_prime_percent = 0.0;
  double branching_factor = 0.0;  // sum_k P(k) k (k-1) / <k>, i.e. <n> / beta
};

/// Bond-percolation threshold: inverse of sum_k P(k) k (k-1) / <k>.
/// Throws InvalidArgument when <k^2> <= <k>.
EpidemicThreshold epidemic_threshold(const DegreeHistogram& h);

/// Closed form <k> / (<k^2> - <k>) from published moments.
EpidemicThreshold epidemic_threshold(double mean_degree, double second_moment);

/// Reusable scratch state for repeated simulations on one graph. Not
/// thread-safe; give each worker its own.
class SirSimulator {
 public:
  explicit SirSimulator(const Graph& g);

  /// One synchronous SIR outbreak from `seed`. Every infected node makes one
  /// Bernoulli(beta) attempt on each still-susceptible neighbor, then
  /// recovers. The attempt u -> v draws `coins.uniform(slot of v in u's
  /// list)`, so outbreaks under one stream are coupled across beta. Returns
  /// the final recovered count, seed included.
  std::size_t run(NodeId seed, InfectionProbability beta, const CoinStream& coins);

 private:
  const Graph* graph_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<NodeId> frontier_;
  std::vector<NodeId> next_;
};

std::size_t sir_run(const Graph& g, NodeId seed, InfectionProbability beta, const CoinStream& coins);

/// Coin stream for replication `replication` of seed `node`.
CoinStream replication_stream(std::uint64_t master_seed, NodeId node, std::uint64_t replication) noexcept;

struct SpreadMoments {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Monte Carlo estimate of the expected outbreak size from `node`. Results
/// depend only on the arguments, never on `workers`.
SpreadMoments influence_spread(const Graph& g, NodeId node, InfectionProbability beta, std::size_t runs,
                               std::uint64_t master_seed, unsigned workers = 1);

struct SpreadEstimate {
  std::vector<double> mean;       // M_i, seed included
  std::vector<double> std_error;  // standard error of each mean
  std::size_t runs = 0;
  InfectionProbability beta = InfectionProbability::from_fraction(0.0);
  std::uint64_t master_seed = 0;
};

SpreadEstimate all_spreads(const Graph& g, InfectionProbability beta, std::size_t runs,
                           std::uint64_t master_seed, unsigned workers = 1);

inline constexpr const char* kSpreadCsvHeader = "node_label,mean_spread,std_error,runs,beta_percent";

/// Rows in node index order.
std::string spread_csv(const Graph& g, const SpreadEstimate& estimate);

}  // namespace spreadbench
