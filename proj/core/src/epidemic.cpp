#include "spreadbench/epidemic.hpp"

#include <algorithm>
#include <cmath>

#include "spreadbench/error.hpp"
#include "spreadbench/format.hpp"
#include "spreadbench/parallel.hpp"

namespace spreadbench {

InfectionProbability InfectionProbability::from_fraction(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw InvalidArgument("infection probability must lie in [0, 1] (got " + format_double(beta) + ")");
  }
  return InfectionProbability(beta);
}

namespace {

[[noreturn]] void throw_no_threshold() {
  throw InvalidArgument("no finite epidemic threshold: <k^2> must exceed <k>");
}

EpidemicThreshold threshold_from_branching(double branching) {
  if (!(branching > 0.0)) throw_no_threshold();
  EpidemicThreshold t;
  t.branching_factor = branching;
  t.beta_prime = 1.0 / branching;
  t.beta_prime_percent = 100.0 * t.beta_prime;
  return t;
}

}  // namespace

EpidemicThreshold epidemic_threshold(const DegreeHistogram& h) {
  if (h.node_count == 0 || h.mean_degree <= 0.0) {
    throw InvalidArgument("no finite epidemic threshold: graph has no edges");
  }
  // sum_k P(k) k (k-1) / <k>; only nonzero when <k^2> > <k>.
  double sum = 0.0;
  for (const auto& [k, count] : h.counts) {
    const double kd = static_cast<double>(k);
    sum += h.probability(k) * kd * (kd - 1.0);
  }
  const double branching = sum / h.mean_degree;
  if (!(h.second_moment > h.mean_degree)) throw_no_threshold();
  return threshold_from_branching(branching);
}

EpidemicThreshold epidemic_threshold(double mean_degree, double second_moment) {
  if (!(mean_degree > 0.0) || !(second_moment > mean_degree)) throw_no_threshold();
  EpidemicThreshold t = threshold_from_branching((second_moment - mean_degree) / mean_degree);
  t.beta_prime = mean_degree / (second_moment - mean_degree);
  t.beta_prime_percent = 100.0 * t.beta_prime;
  return t;
}

SirSimulator::SirSimulator(const Graph& g) : graph_(&g), stamp_(g.node_count(), 0) {
  frontier_.reserve(g.node_count());
  next_.reserve(g.node_count());
}

std::size_t SirSimulator::run(NodeId seed, InfectionProbability beta, const CoinStream& coins) {
  const Graph& g = *graph_;
  if (seed >= g.node_count()) throw InvalidArgument("sir_run: seed node out of range");
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  const double p = beta.fraction();

  // A stamped node has been infected at some step (it is infected or recovered).
  stamp_[seed] = epoch_;
  frontier_.assign(1, seed);
  std::size_t reached = 1;
  while (!frontier_.empty()) {
    next_.clear();
    for (NodeId u : frontier_) {
      const auto neighbors = g.neighbors(u);
      const std::size_t base = g.slot_offset(u);
      for (std::size_t k = 0; k < neighbors.size(); ++k) {
        const NodeId v = neighbors[k];
        if (stamp_[v] == epoch_) continue;
        if (coins.uniform(base + k) < p) {
          stamp_[v] = epoch_;
          next_.push_back(v);
        }
      }
    }
    reached += next_.size();
    frontier_.swap(next_);
  }
  return reached;
}

std::size_t sir_run(const Graph& g, NodeId seed, InfectionProbability beta, const CoinStream& coins) {
  SirSimulator sim(g);
  return sim.run(seed, beta, coins);
}

CoinStream replication_stream(std::uint64_t master_seed, NodeId node, std::uint64_t replication) noexcept {
  return CoinStream(derive_key(derive_key(master_seed, node), replication));
}

namespace {

// Replications are grouped into fixed-size chunks so that small graphs with
// many runs still spread across workers. Sums of integers are exact, so the
// reduction is order-independent.
constexpr std::size_t kChunkRuns = 2048;

struct OutcomeSums {
  std::uint64_t sum = 0;
  std::uint64_t sum_squares = 0;
};

SpreadMoments moments(const OutcomeSums& s, std::size_t runs) {
  SpreadMoments m;
  const double r = static_cast<double>(runs);
  m.mean = static_cast<double>(s.sum) / r;
  if (runs > 1) {
    const double sum = static_cast<double>(s.sum);
    const double variance = std::max(0.0, (static_cast<double>(s.sum_squares) - sum * m.mean) / (r - 1.0));
    m.std_error = std::sqrt(variance / r);
  }
  return m;
}

void require_runs(std::size_t runs) {
  if (runs == 0) throw InvalidArgument("runs must be at least 1");
}

}  // namespace

SpreadMoments influence_spread(const Graph& g, NodeId node, InfectionProbability beta, std::size_t runs,
                               std::uint64_t master_seed, unsigned workers) {
  require_runs(runs);
  if (node >= g.node_count()) throw InvalidArgument("influence_spread: node out of range");
  const std::size_t chunks = (runs + kChunkRuns - 1) / kChunkRuns;
  std::vector<OutcomeSums> partial(chunks);
  std::vector<SirSimulator> sims(effective_workers(chunks, workers), SirSimulator(g));
  parallel_for(chunks, workers, [&](std::size_t chunk, unsigned worker) {
    const std::size_t first = chunk * kChunkRuns;
    const std::size_t last = std::min(runs, first + kChunkRuns);
    OutcomeSums sums;
    for (std::size_t r = first; r < last; ++r) {
      const std::uint64_t size = sims[worker].run(node, beta, replication_stream(master_seed, node, r));
      sums.sum += size;
      sums.sum_squares += size * size;
    }
    partial[chunk] = sums;
  });
  OutcomeSums total;
  for (const auto& p : partial) {
    total.sum += p.sum;
    total.sum_squares += p.sum_squares;
  }
  return moments(total, runs);
}

SpreadEstimate all_spreads(const Graph& g, InfectionProbability beta, std::size_t runs, std::uint64_t master_seed,
                           unsigned workers) {
  require_runs(runs);
  const std::size_t n = g.node_count();
  const std::size_t chunks_per_node = (runs + kChunkRuns - 1) / kChunkRuns;
  const std::size_t items = n * chunks_per_node;
  std::vector<OutcomeSums> partial(items);
  std::vector<SirSimulator> sims(effective_workers(items, workers), SirSimulator(g));

  parallel_for(items, workers, [&](std::size_t item, unsigned worker) {
    const auto node = static_cast<NodeId>(item / chunks_per_node);
    const std::size_t first = (item % chunks_per_node) * kChunkRuns;
    const std::size_t last = std::min(runs, first + kChunkRuns);
    OutcomeSums sums;
    for (std::size_t r = first; r < last; ++r) {
      const std::uint64_t size = sims[worker].run(node, beta, replication_stream(master_seed, node, r));
      sums.sum += size;
      sums.sum_squares += size * size;
    }
    partial[item] = sums;
  });

  SpreadEstimate estimate;
  estimate.mean.resize(n);
  estimate.std_error.resize(n);
  estimate.runs = runs;
  estimate.beta = beta;
  estimate.master_seed = master_seed;
  for (std::size_t i = 0; i < n; ++i) {
    OutcomeSums total;
    for (std::size_t c = 0; c < chunks_per_node; ++c) {
      total.sum += partial[i * chunks_per_node + c].sum;
      total.sum_squares += partial[i * chunks_per_node + c].sum_squares;
    }
    const auto m = moments(total, runs);
    estimate.mean[i] = m.mean;
    estimate.std_error[i] = m.std_error;
  }
  return estimate;
}

std::string spread_csv(const Graph& g, const SpreadEstimate& estimate) {
  std::string out = kSpreadCsvHeader;
  out += '\n';
  const std::string runs = std::to_string(estimate.runs);
  const std::string beta = format_double(estimate.beta.percent());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    out += g.label(i) + ',' + format_double(estimate.mean[i]) + ',' + format_double(estimate.std_error[i]) + ',' +
           runs + ',' + beta + '\n';
  }
  return out;
}

}  // namespace spreadbench
