#include "spreadbench/imprecision.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "spreadbench/error.hpp"
#include "spreadbench/format.hpp"
#include "spreadbench/stats.hpp"

namespace spreadbench {

std::size_t top_set_size(double p, std::size_t n) {
  if (!(p > 0.0 && p <= 100.0)) {
    throw InvalidArgument("top-set percentage must lie in (0, 100] (got " + format_double(p) + ")");
  }
  const auto size = static_cast<std::size_t>(std::floor(p * static_cast<double>(n) / 100.0 + 0.5));
  return std::clamp<std::size_t>(size, 1, std::max<std::size_t>(n, 1));
}

TopSet top_set(const Ranking& ranking, double p, std::size_t n) {
  const std::size_t size = std::min(top_set_size(p, n), ranking.order.size());
  return {p, {ranking.order.begin(), ranking.order.begin() + static_cast<std::ptrdiff_t>(size)}};
}

namespace {

// Summing in descending order makes M_c <= M_eff hold exactly in floating
// point: the k-th largest spread of the true top set dominates the k-th
// largest of any other set of the same size, and rounding is monotone.
double mean_spread(const std::vector<double>& spread, const std::vector<NodeId>& members) {
  std::vector<double> values;
  values.reserve(members.size());
  for (NodeId i : members) values.push_back(spread[i]);
  std::sort(values.begin(), values.end(), std::greater<>());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

void check_coverage(const SpreadEstimate& spreads, const CentralityScores& scores) {
  if (spreads.mean.size() != scores.values.size()) {
    throw InvalidArgument("imprecision: spread estimate covers " + std::to_string(spreads.mean.size()) +
                          " nodes but '" + scores.measure + "' scores cover " +
                          std::to_string(scores.values.size()));
  }
  if (spreads.mean.empty()) throw InvalidArgument("imprecision: no nodes");
}

double imprecision_ranked(const std::vector<double>& spread, const Ranking& efficient, const Ranking& predicted,
                          double p) {
  const std::size_t n = spread.size();
  const double m_eff = mean_spread(spread, top_set(efficient, p, n).members);
  const double m_c = mean_spread(spread, top_set(predicted, p, n).members);
  return 1.0 - m_c / m_eff;
}

void check_same_grid(const ImprecisionCurve& a, const ImprecisionCurve& b, const char* what) {
  bool same = a.x_kind == b.x_kind && a.points.size() == b.points.size();
  for (std::size_t i = 0; same && i < a.points.size(); ++i) same = a.points[i].x == b.points[i].x;
  if (!same) {
    throw InvalidArgument(std::string(what) + ": curves '" + a.network + "/" + a.measure + "' and '" + b.network +
                          "/" + b.measure + "' use different grids");
  }
}

std::optional<double> common_beta(const std::vector<const ImprecisionCurve*>& curves) {
  const auto& first = curves.front()->beta_percent;
  for (const auto* c : curves) {
    if (c->beta_percent != first) return std::nullopt;
  }
  return first;
}

}  // namespace

double imprecision(const SpreadEstimate& spreads, const CentralityScores& scores, double p) {
  check_coverage(spreads, scores);
  return imprecision_ranked(spreads.mean, rank_nodes(spreads.mean), rank_nodes(scores), p);
}

ImprecisionCurve imprecision_curve(const SpreadEstimate& spreads, const CentralityScores& scores,
                                   const std::vector<double>& p_grid) {
  check_coverage(spreads, scores);
  if (p_grid.empty()) throw InvalidArgument("imprecision_curve: empty p grid");
  const Ranking efficient = rank_nodes(spreads.mean);
  const Ranking predicted = rank_nodes(scores);

  ImprecisionCurve curve;
  curve.measure = scores.measure;
  curve.beta_percent = spreads.beta.percent();
  curve.runs = spreads.runs;
  curve.master_seed = spreads.master_seed;
  curve.x_kind = AxisKind::p;
  for (double p : p_grid) curve.points.push_back({p, imprecision_ranked(spreads.mean, efficient, predicted, p)});
  return curve;
}

std::vector<ImprecisionCurve> beta_sweep(const Graph& g, const std::vector<CentralityScores>& scores,
                                         const BetaSweepOptions& options) {
  std::vector<InfectionProbability> betas;
  if (!options.beta_percents.empty()) {
    for (double percent : options.beta_percents) betas.push_back(InfectionProbability::from_percent(percent));
  } else {
    const double beta_prime = epidemic_threshold(degree_histogram(g)).beta_prime;
    for (double multiple : options.beta_multiples) {
      betas.push_back(InfectionProbability::from_fraction(multiple * beta_prime));
    }
  }
  if (betas.empty()) throw InvalidArgument("beta_sweep: empty beta grid");

  std::vector<Ranking> rankings;
  rankings.reserve(scores.size());
  std::vector<ImprecisionCurve> curves(scores.size());
  for (std::size_t m = 0; m < scores.size(); ++m) {
    if (scores[m].values.size() != g.node_count()) {
      throw InvalidArgument("beta_sweep: '" + scores[m].measure + "' scores do not cover the graph");
    }
    rankings.push_back(rank_nodes(scores[m]));
    curves[m].measure = scores[m].measure;
    curves[m].runs = options.runs;
    curves[m].master_seed = options.master_seed;
    curves[m].x_kind = AxisKind::beta_percent;
  }

  for (const auto beta : betas) {
    const SpreadEstimate spreads = options.spreads
                                       ? options.spreads(beta)
                                       : all_spreads(g, beta, options.runs, options.master_seed, options.workers);
    const Ranking efficient = rank_nodes(spreads.mean);
    for (std::size_t m = 0; m < scores.size(); ++m) {
      curves[m].points.push_back(
          {beta.percent(), imprecision_ranked(spreads.mean, efficient, rankings[m], options.p)});
    }
  }
  return curves;
}

ImprecisionCurve average_curves(const std::vector<ImprecisionCurve>& curves) {
  if (curves.empty()) throw InvalidArgument("average_curves: no curves");
  const ImprecisionCurve& first = curves.front();
  std::vector<const ImprecisionCurve*> all;
  for (const auto& c : curves) {
    if (c.measure != first.measure) {
      throw InvalidArgument("average_curves: mixed measures '" + first.measure + "' and '" + c.measure + "'");
    }
    check_same_grid(first, c, "average_curves");
    all.push_back(&c);
  }

  ImprecisionCurve avg = first;
  avg.network = kAverageNetwork;
  avg.beta_percent = common_beta(all);
  const double count = static_cast<double>(curves.size());
  for (std::size_t i = 0; i < avg.points.size(); ++i) {
    // Offsets from the first curve keep the mean of identical curves exact.
    const double base = first.points[i].epsilon;
    double offset = 0.0;
    for (const auto& c : curves) offset += c.points[i].epsilon - base;
    avg.points[i].epsilon = base + offset / count;
  }
  return avg;
}

ImprecisionCurve pairwise_difference(const ImprecisionCurve& a, const ImprecisionCurve& b) {
  check_same_grid(a, b, "pairwise_difference");
  ImprecisionCurve diff = a;
  diff.network = kDifferenceNetwork;
  diff.measure = a.measure + "-" + b.measure;
  diff.beta_percent = common_beta({&a, &b});
  for (std::size_t i = 0; i < diff.points.size(); ++i) diff.points[i].epsilon = a.points[i].epsilon - b.points[i].epsilon;
  return diff;
}

std::string curves_csv(const std::vector<ImprecisionCurve>& curves) {
  std::string out = kCurveCsvHeader;
  out += '\n';
  for (const auto& c : curves) {
    const std::string prefix = c.network + ',' + c.measure + ',';
    const std::string meta = ',' + std::to_string(c.runs) + ',' + std::to_string(c.master_seed) + ',' +
                             (c.x_kind == AxisKind::p ? "p" : "beta_percent") + ',';
    for (const auto& point : c.points) {
      std::string beta;
      if (c.beta_percent) {
        beta = format_double(*c.beta_percent);
      } else if (c.x_kind == AxisKind::beta_percent) {
        beta = format_double(point.x);
      }
      out += prefix + beta + meta + format_double(point.x) + ',' + format_double(point.epsilon) + '\n';
    }
  }
  return out;
}

}  // namespace spreadbench
