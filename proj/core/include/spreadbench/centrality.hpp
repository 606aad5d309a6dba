#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spreadbench/graph.hpp"

namespace spreadbench {

enum class Measure {
  degree,
  kshell,
  betweenness,
  closeness,
  eigenvector,
  pagerank,
  nghd2,
  nghd3,
  nghd5,
  nghd10,
};

inline constexpr std::array<Measure, 10> kAllMeasures = {
    Measure::degree,      Measure::kshell,   Measure::betweenness, Measure::closeness,
    Measure::eigenvector, Measure::pagerank, Measure::nghd2,       Measure::nghd3,
    Measure::nghd5,       Measure::nghd10,
};

std::string_view measure_name(Measure m) noexcept;
std::optional<Measure> parse_measure(std::string_view token) noexcept;

/// Per-node scores for one named measure. `measure` is free text so that
/// externally supplied score vectors can be evaluated alongside built-ins.
struct CentralityScores {
  std::string measure;
  std::vector<double> values;
};

/// Node indices ordered best-first: score descending, then index ascending.
struct Ranking {
  std::vector<NodeId> order;
};

Ranking rank_nodes(const std::vector<double>& scores);
inline Ranking rank_nodes(const CentralityScores& scores) { return rank_nodes(scores.values); }

enum class PageRankVariant { pure, damped };

struct IterationOptions {
  double tolerance;
  std::size_t max_iterations = 10'000;
};

struct CentralityOptions {
  IterationOptions eigenvector{1e-10};
  IterationOptions pagerank{1e-12};
  PageRankVariant pagerank_variant = PageRankVariant::damped;
  double damping = 0.85;
  unsigned workers = 1;
};

CentralityScores degree_centrality(const Graph& g);

/// Shell number per node (k-core decomposition). Peels nodes with current
/// degree <= S at stage S = 0, 1, 2, ...
CentralityScores shell_decomposition(const Graph& g);

/// Sum over unordered pairs {s,t} not containing v of sigma_st(v)/sigma_st.
/// Unnormalized; the result does not depend on `workers`.
CentralityScores betweenness_centrality(const Graph& g, unsigned workers = 1);

/// (N-1) / sum of hop distances. Throws InvalidArgument on disconnected graphs.
CentralityScores closeness_centrality(const Graph& g, unsigned workers = 1);

struct EigenvectorResult {
  CentralityScores scores;
  double eigenvalue = 0.0;  // Rayleigh quotient of the returned vector
  std::size_t iterations = 0;
};

/// Principal eigenvector of the adjacency matrix, non-negative, unit norm.
EigenvectorResult eigenvector_centrality_detailed(const Graph& g, const IterationOptions& options = {1e-10});
CentralityScores eigenvector_centrality(const Graph& g, const IterationOptions& options = {1e-10});

/// Random-walk rank over undirected edges, summing to one. `pure` iterates
/// R_v = c * sum R_u / d_u with no teleport and fails to converge on
/// bipartite graphs; `damped` adds uniform teleport with weight 1 - damping.
CentralityScores pagerank(const Graph& g, PageRankVariant variant, double damping = 0.85,
                          const IterationOptions& options = {1e-12});

/// Number of nodes within hop distance q, the node itself included.
CentralityScores q_neighborhood(const Graph& g, unsigned q, unsigned workers = 1);

/// Dispatches on `measure`, naming the result by its canonical token.
CentralityScores compute_measure(const Graph& g, Measure measure, const CentralityOptions& options = {});

}  // namespace spreadbench
