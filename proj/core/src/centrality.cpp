#include "spreadbench/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "spreadbench/error.hpp"
#include "spreadbench/parallel.hpp"

namespace spreadbench {

namespace {

constexpr std::array<std::string_view, 10> kMeasureNames = {
    "degree", "kshell", "betweenness", "closeness", "eigenvector",
    "pagerank", "nghd2", "nghd3", "nghd5", "nghd10",
};

CentralityScores named(Measure m, std::vector<double> values) {
  return {std::string(measure_name(m)), std::move(values)};
}

double max_abs_difference(const std::vector<double>& a, const std::vector<double>& b) {
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
  return diff;
}

}  // namespace

std::string_view measure_name(Measure m) noexcept { return kMeasureNames[static_cast<std::size_t>(m)]; }

std::optional<Measure> parse_measure(std::string_view token) noexcept {
  for (std::size_t i = 0; i < kMeasureNames.size(); ++i) {
    if (kMeasureNames[i] == token) return static_cast<Measure>(i);
  }
  return std::nullopt;
}

Ranking rank_nodes(const std::vector<double>& scores) {
  Ranking ranking;
  ranking.order.resize(scores.size());
  std::iota(ranking.order.begin(), ranking.order.end(), NodeId{0});
  std::stable_sort(ranking.order.begin(), ranking.order.end(),
                   [&scores](NodeId a, NodeId b) { return scores[a] > scores[b]; });
  return ranking;
}

CentralityScores degree_centrality(const Graph& g) {
  std::vector<double> values(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) values[i] = static_cast<double>(g.degree(i));
  return named(Measure::degree, std::move(values));
}

CentralityScores shell_decomposition(const Graph& g) {
  // Bucket peeling in O(N + E): nodes are kept sorted by current degree and
  // the minimum-degree node is removed repeatedly.
  const std::size_t n = g.node_count();
  std::vector<std::size_t> degree(n);
  std::size_t max_degree = 0;
  for (NodeId i = 0; i < n; ++i) {
    degree[i] = g.degree(i);
    max_degree = std::max(max_degree, degree[i]);
  }

  std::vector<std::size_t> bucket_start(max_degree + 2, 0);
  for (std::size_t d : degree) ++bucket_start[d + 1];
  std::partial_sum(bucket_start.begin(), bucket_start.end(), bucket_start.begin());

  std::vector<NodeId> order(n);
  std::vector<std::size_t> position(n);
  {
    auto fill = bucket_start;
    for (NodeId i = 0; i < n; ++i) {
      position[i] = fill[degree[i]]++;
      order[position[i]] = i;
    }
  }

  for (std::size_t idx = 0; idx < n; ++idx) {
    const NodeId u = order[idx];
    for (NodeId v : g.neighbors(u)) {
      if (degree[v] <= degree[u]) continue;
      // Swap v to the front of its bucket, then shrink the bucket by one.
      const std::size_t dv = degree[v];
      const std::size_t front = bucket_start[dv];
      const NodeId w = order[front];
      if (w != v) {
        std::swap(order[front], order[position[v]]);
        position[w] = position[v];
        position[v] = front;
      }
      ++bucket_start[dv];
      --degree[v];
    }
  }

  std::vector<double> values(n);
  for (NodeId i = 0; i < n; ++i) values[i] = static_cast<double>(degree[i]);
  return named(Measure::kshell, std::move(values));
}

CentralityScores betweenness_centrality(const Graph& g, unsigned workers) {
  const std::size_t n = g.node_count();
  // Sources are grouped into a worker-independent set of blocks whose partial
  // sums are merged in block order, so rounding never depends on scheduling.
  const std::size_t block_size = std::max<std::size_t>(32, (n + 63) / 64);
  const std::size_t block_count = (n + block_size - 1) / block_size;
  std::vector<std::vector<double>> partial(block_count);

  struct Scratch {
    std::vector<double> sigma, delta;
    std::vector<int> dist;
    std::vector<NodeId> order;
  };
  std::vector<Scratch> scratch(effective_workers(block_count, workers));

  parallel_for(block_count, workers, [&](std::size_t block, unsigned worker) {
    auto& s = scratch[worker];
    s.sigma.resize(n);
    s.delta.resize(n);
    s.dist.resize(n);
    s.order.resize(n);
    std::vector<double> acc(n, 0.0);

    const std::size_t first = block * block_size;
    const std::size_t last = std::min(n, first + block_size);
    for (std::size_t src = first; src < last; ++src) {
      std::fill(s.sigma.begin(), s.sigma.end(), 0.0);
      std::fill(s.delta.begin(), s.delta.end(), 0.0);
      std::fill(s.dist.begin(), s.dist.end(), -1);

      const auto source = static_cast<NodeId>(src);
      std::size_t tail = 0;
      s.order[tail++] = source;
      s.sigma[source] = 1.0;
      s.dist[source] = 0;
      for (std::size_t head = 0; head < tail; ++head) {
        const NodeId u = s.order[head];
        for (NodeId v : g.neighbors(u)) {
          if (s.dist[v] < 0) {
            s.dist[v] = s.dist[u] + 1;
            s.order[tail++] = v;
          }
          if (s.dist[v] == s.dist[u] + 1) s.sigma[v] += s.sigma[u];
        }
      }
      // Dependency accumulation in reverse BFS order.
      for (std::size_t k = tail; k-- > 1;) {
        const NodeId w = s.order[k];
        for (NodeId u : g.neighbors(w)) {
          if (s.dist[u] == s.dist[w] - 1) s.delta[u] += s.sigma[u] / s.sigma[w] * (1.0 + s.delta[w]);
        }
        acc[w] += s.delta[w];
      }
    }
    partial[block] = std::move(acc);
  });

  std::vector<double> values(n, 0.0);
  for (const auto& block : partial) {
    for (std::size_t i = 0; i < n; ++i) values[i] += block[i];
  }
  // Every unordered pair was visited from both endpoints.
  for (double& v : values) v *= 0.5;
  return named(Measure::betweenness, std::move(values));
}

CentralityScores closeness_centrality(const Graph& g, unsigned workers) {
  if (!is_connected(g)) throw InvalidArgument("closeness_centrality: graph is not connected");
  const std::size_t n = g.node_count();
  std::vector<double> values(n, 0.0);
  if (n == 1) return named(Measure::closeness, std::move(values));

  parallel_for(n, workers, [&](std::size_t i, unsigned) {
    const auto dist = bfs_distances(g, static_cast<NodeId>(i));
    std::uint64_t total = 0;
    for (int d : dist) total += static_cast<std::uint64_t>(d);
    values[i] = static_cast<double>(n - 1) / static_cast<double>(total);
  });
  return named(Measure::closeness, std::move(values));
}

EigenvectorResult eigenvector_centrality_detailed(const Graph& g, const IterationOptions& options) {
  const std::size_t n = g.node_count();
  if (n == 0) throw InvalidArgument("eigenvector_centrality: graph has no nodes");

  // Iterating with A + I keeps the eigenvectors of A but makes the principal
  // eigenvalue strictly dominant in modulus, which plain A is not on
  // bipartite graphs.
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double residual = std::numeric_limits<double>::infinity();
  std::size_t iteration = 0;
  while (iteration < options.max_iterations) {
    ++iteration;
    double norm = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      double sum = x[i];
      for (NodeId j : g.neighbors(i)) sum += x[j];
      y[i] = sum;
      norm += sum * sum;
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) throw InvalidArgument("eigenvector_centrality: iteration collapsed to zero");
    for (double& v : y) v /= norm;
    residual = max_abs_difference(x, y);
    x.swap(y);
    if (residual < options.tolerance) break;
  }
  if (residual >= options.tolerance) {
    throw ConvergenceError("eigenvector_centrality: no convergence after " +
                               std::to_string(options.max_iterations) + " iterations",
                           residual);
  }

  double rayleigh = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    double sum = 0.0;
    for (NodeId j : g.neighbors(i)) sum += x[j];
    rayleigh += x[i] * sum;
  }
  return {named(Measure::eigenvector, std::move(x)), rayleigh, iteration};
}

CentralityScores eigenvector_centrality(const Graph& g, const IterationOptions& options) {
  return eigenvector_centrality_detailed(g, options).scores;
}

CentralityScores pagerank(const Graph& g, PageRankVariant variant, double damping, const IterationOptions& options) {
  const std::size_t n = g.node_count();
  if (n == 0) throw InvalidArgument("pagerank: graph has no nodes");
  if (variant == PageRankVariant::damped && !(damping > 0.0 && damping <= 1.0)) {
    throw InvalidArgument("pagerank: damping must lie in (0, 1]");
  }
  for (NodeId i = 0; i < n; ++i) {
    if (g.degree(i) == 0) throw InvalidArgument("pagerank: node '" + g.label(i) + "' has no edges");
  }

  const double dn = static_cast<double>(n);
  const double follow = variant == PageRankVariant::pure ? 1.0 : damping;
  const double teleport = (1.0 - follow) / dn;

  std::vector<double> rank(n, 1.0 / dn);
  std::vector<double> share(n);
  std::vector<double> next(n);
  double residual = std::numeric_limits<double>::infinity();
  for (std::size_t iteration = 0; iteration < options.max_iterations; ++iteration) {
    for (NodeId i = 0; i < n; ++i) share[i] = rank[i] / static_cast<double>(g.degree(i));
    double total = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double sum = 0.0;
      for (NodeId u : g.neighbors(v)) sum += share[u];
      next[v] = teleport + follow * sum;
      total += next[v];
    }
    for (double& r : next) r /= total;
    residual = max_abs_difference(rank, next);
    rank.swap(next);
    if (residual < options.tolerance) return named(Measure::pagerank, std::move(rank));
  }
  std::string message = "pagerank: no convergence after " + std::to_string(options.max_iterations) + " iterations";
  if (variant == PageRankVariant::pure) message += "; the pure variant oscillates on bipartite graphs, use the damped variant";
  throw ConvergenceError(message, residual);
}

CentralityScores q_neighborhood(const Graph& g, unsigned q, unsigned workers) {
  const std::size_t n = g.node_count();
  std::vector<double> values(n, 0.0);

  struct Scratch {
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;
    std::vector<NodeId> frontier, next;
  };
  std::vector<Scratch> scratch(effective_workers(n, workers));

  parallel_for(n, workers, [&](std::size_t i, unsigned worker) {
    auto& s = scratch[worker];
    if (s.stamp.size() != n) s.stamp.assign(n, 0);
    if (++s.epoch == 0) {
      std::fill(s.stamp.begin(), s.stamp.end(), 0);
      s.epoch = 1;
    }
    const auto source = static_cast<NodeId>(i);
    s.stamp[source] = s.epoch;
    s.frontier.assign(1, source);
    std::size_t reached = 1;
    for (unsigned depth = 0; depth < q && !s.frontier.empty(); ++depth) {
      s.next.clear();
      for (NodeId u : s.frontier) {
        for (NodeId v : g.neighbors(u)) {
          if (s.stamp[v] != s.epoch) {
            s.stamp[v] = s.epoch;
            s.next.push_back(v);
          }
        }
      }
      reached += s.next.size();
      s.frontier.swap(s.next);
    }
    values[i] = static_cast<double>(reached);
  });

  const Measure m = q == 2 ? Measure::nghd2 : q == 3 ? Measure::nghd3 : q == 5 ? Measure::nghd5 : Measure::nghd10;
  CentralityScores scores = named(m, std::move(values));
  if (q != 2 && q != 3 && q != 5 && q != 10) scores.measure = "nghd" + std::to_string(q);
  return scores;
}

CentralityScores compute_measure(const Graph& g, Measure measure, const CentralityOptions& options) {
  switch (measure) {
    case Measure::degree: return degree_centrality(g);
    case Measure::kshell: return shell_decomposition(g);
    case Measure::betweenness: return betweenness_centrality(g, options.workers);
    case Measure::closeness: return closeness_centrality(g, options.workers);
    case Measure::eigenvector: return eigenvector_centrality(g, options.eigenvector);
    case Measure::pagerank: return pagerank(g, options.pagerank_variant, options.damping, options.pagerank);
    case Measure::nghd2: return q_neighborhood(g, 2, options.workers);
    case Measure::nghd3: return q_neighborhood(g, 3, options.workers);
    case Measure::nghd5: return q_neighborhood(g, 5, options.workers);
    case Measure::nghd10: return q_neighborhood(g, 10, options.workers);
  }
  throw InvalidArgument("compute_measure: unknown measure");
}

}  // namespace spreadbench
