#include "spreadbench/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "spreadbench/error.hpp"
#include "spreadbench/format.hpp"
#include "spreadbench/parallel.hpp"

namespace spreadbench {

namespace {

// Binary-counter cascade: after 2^k additions the top level holds the
// pairwise (tree) sum of all terms. Works on whole vectors at once.
class PairwiseSum {
 public:
  PairwiseSum(std::size_t width, std::size_t max_levels) : levels_(max_levels + 1, std::vector<double>(width, 0.0)) {}

  void add(std::vector<double>& terms) {
    std::uint64_t carry = count_++;
    std::size_t level = 0;
    while (carry & 1) {
      auto& stored = levels_[level];
      for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = stored[i] + terms[i];
      carry >>= 1;
      ++level;
    }
    levels_[level].swap(terms);
    terms.resize(levels_[level].size());
  }

  /// Valid when the number of additions is a power of two.
  const std::vector<double>& total() const { return levels_[std::countr_zero(count_)]; }

 private:
  std::vector<std::vector<double>> levels_;
  std::uint64_t count_ = 0;
};

struct DisjointSets {
  std::vector<NodeId> parent;
  std::vector<std::size_t> size;

  void reset(std::size_t n) {
    parent.resize(n);
    std::iota(parent.begin(), parent.end(), NodeId{0});
    size.assign(n, 1);
  }

  NodeId find(NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

void check_bound(std::size_t edge_count) {
  if (edge_count > kOracleMaxEdges) {
    throw InvalidArgument("exact enumeration needs at most " + std::to_string(kOracleMaxEdges) +
                          " edges (2^" + std::to_string(kOracleMaxEdges) + " edge subsets); graph has " +
                          std::to_string(edge_count));
  }
}

// weights[live] = beta^live (1 - beta)^(m - live)
std::vector<double> subset_weights(std::size_t m, double beta) {
  std::vector<double> weights(m + 1);
  for (std::size_t live = 0; live <= m; ++live) {
    weights[live] = std::pow(beta, static_cast<double>(live)) * std::pow(1.0 - beta, static_cast<double>(m - live));
  }
  return weights;
}

// Fixed chunking keeps the summation tree independent of the worker count.
std::size_t chunk_bits(std::size_t m) { return std::min<std::size_t>(m, 6); }

std::vector<double> merge_pairwise(std::vector<std::vector<double>> parts) {
  while (parts.size() > 1) {
    std::vector<std::vector<double>> merged(parts.size() / 2);
    for (std::size_t i = 0; i < merged.size(); ++i) {
      merged[i] = std::move(parts[2 * i]);
      for (std::size_t j = 0; j < merged[i].size(); ++j) merged[i][j] += parts[2 * i + 1][j];
    }
    parts = std::move(merged);
  }
  return std::move(parts.front());
}

}  // namespace

std::vector<ExactSpread> exact_all_spreads(const Graph& g, InfectionProbability beta, unsigned workers) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  check_bound(m);
  const std::size_t n = g.node_count();
  const auto weights = subset_weights(m, beta.fraction());

  const std::size_t cbits = chunk_bits(m);
  const std::size_t chunks = std::size_t{1} << cbits;
  const std::uint64_t per_chunk = std::uint64_t{1} << (m - cbits);
  std::vector<std::vector<double>> parts(chunks);

  parallel_for(chunks, workers, [&](std::size_t chunk, unsigned) {
    PairwiseSum sum(n, m - cbits);
    DisjointSets sets;
    std::vector<double> terms(n);
    const std::uint64_t first = chunk * per_chunk;
    for (std::uint64_t mask = first; mask < first + per_chunk; ++mask) {
      sets.reset(n);
      for (std::size_t e = 0; e < m; ++e) {
        if ((mask >> e) & 1) sets.unite(edges[e].first, edges[e].second);
      }
      const double w = weights[std::popcount(mask)];
      for (NodeId i = 0; i < n; ++i) terms[i] = w * static_cast<double>(sets.size[sets.find(i)]);
      sum.add(terms);
    }
    parts[chunk] = sum.total();
  });

  const auto totals = merge_pairwise(std::move(parts));
  std::vector<ExactSpread> out(n);
  for (NodeId i = 0; i < n; ++i) out[i] = {i, beta, totals[i]};
  return out;
}

ExactSpread exact_influence_spread(const Graph& g, NodeId node, InfectionProbability beta) {
  if (node >= g.node_count()) throw InvalidArgument("exact_influence_spread: node out of range");
  return exact_all_spreads(g, beta)[node];
}

double percolation_weight_total(std::size_t edge_count, InfectionProbability beta) {
  check_bound(edge_count);
  const auto weights = subset_weights(edge_count, beta.fraction());
  PairwiseSum sum(1, edge_count);
  std::vector<double> term(1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edge_count); ++mask) {
    term[0] = weights[std::popcount(mask)];
    sum.add(term);
  }
  return sum.total()[0];
}

std::string exact_spread_csv(const Graph& g, const std::vector<ExactSpread>& spreads) {
  std::string out = kSpreadCsvHeader;
  out += '\n';
  for (const auto& s : spreads) {
    out += g.label(s.node) + ',' + format_double(s.value) + ",0,0," + format_double(s.beta.percent()) + '\n';
  }
  return out;
}

}  // namespace spreadbench
