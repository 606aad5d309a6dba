#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spreadbench/centrality.hpp"
#include "spreadbench/epidemic.hpp"
#include "spreadbench/graph.hpp"

namespace spreadbench {

/// The best-ranked max(1, round(p N / 100)) nodes, rounding half up.
struct TopSet {
  double p = 0.0;
  std::vector<NodeId> members;
};

std::size_t top_set_size(double p, std::size_t n);
TopSet top_set(const Ranking& ranking, double p, std::size_t n);

/// 1 - M_c(p) / M_eff(p): the shortfall of the measure's top p% against the
/// true top p% by mean spread.
double imprecision(const SpreadEstimate& spreads, const CentralityScores& scores, double p);

enum class AxisKind { p, beta_percent };

struct CurvePoint {
  double x = 0.0;
  double epsilon = 0.0;
};

struct ImprecisionCurve {
  std::string network;
  std::string measure;
  std::optional<double> beta_percent;  // unset for beta sweeps and mixed-beta averages
  std::size_t runs = 0;
  std::uint64_t master_seed = 0;
  AxisKind x_kind = AxisKind::p;
  std::vector<CurvePoint> points;
};

inline const std::vector<double> kDefaultPGrid = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
inline const std::vector<double> kDefaultBetaMultiples = {1.1, 1.2, 1.3, 1.4, 1.5,
                                                          1.6, 1.7, 1.8, 1.9, 2.0};

ImprecisionCurve imprecision_curve(const SpreadEstimate& spreads, const CentralityScores& scores,
                                   const std::vector<double>& p_grid = kDefaultPGrid);

/// Supplies spread estimates for a given beta; lets callers cache simulations.
using SpreadProvider = std::function<SpreadEstimate(InfectionProbability)>;

struct BetaSweepOptions {
  std::vector<double> beta_multiples = kDefaultBetaMultiples;
  std::vector<double> beta_percents;  // explicit grid; replaces the multiples when nonempty
  double p = 5.0;
  std::size_t runs = 1000;
  std::uint64_t master_seed = 0;
  unsigned workers = 1;
  SpreadProvider spreads;  // defaults to all_spreads with the settings above
};

/// Imprecision at fixed p versus beta = multiple * beta', one curve per
/// measure. Each beta is simulated once and shared by all measures.
std::vector<ImprecisionCurve> beta_sweep(const Graph& g, const std::vector<CentralityScores>& scores,
                                         const BetaSweepOptions& options);

/// Pointwise mean across networks. Curves must share measure, axis and grid.
ImprecisionCurve average_curves(const std::vector<ImprecisionCurve>& curves);

/// Pointwise a - b; positive where a is the worse identifier.
ImprecisionCurve pairwise_difference(const ImprecisionCurve& a, const ImprecisionCurve& b);

inline constexpr const char* kAverageNetwork = "__average__";
inline constexpr const char* kDifferenceNetwork = "__diff__";
inline constexpr const char* kCurveCsvHeader = "network,measure,beta_percent,runs,master_seed,x_kind,x,epsilon";

/// Header plus one row per point of every curve, in the given order.
std::string curves_csv(const std::vector<ImprecisionCurve>& curves);

}  // namespace spreadbench
