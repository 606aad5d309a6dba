#include "spreadbench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "spreadbench/centrality.hpp"
#include "spreadbench/epidemic.hpp"
#include "spreadbench/error.hpp"
#include "spreadbench/format.hpp"

namespace spreadbench {

double DegreeHistogram::probability(std::size_t degree) const {
  const auto it = counts.find(degree);
  if (it == counts.end() || node_count == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(node_count);
}

DegreeHistogram DegreeHistogram::from_counts(std::map<std::size_t, std::size_t> counts) {
  DegreeHistogram h;
  h.counts = std::move(counts);
  double first = 0.0;
  double second = 0.0;
  for (const auto& [k, count] : h.counts) {
    h.node_count += count;
    const double kc = static_cast<double>(k) * static_cast<double>(count);
    first += kc;
    second += kc * static_cast<double>(k);
  }
  if (h.node_count > 0) {
    h.mean_degree = first / static_cast<double>(h.node_count);
    h.second_moment = second / static_cast<double>(h.node_count);
  }
  return h;
}

DegreeHistogram degree_histogram(const Graph& g) {
  std::map<std::size_t, std::size_t> counts;
  for (NodeId i = 0; i < g.node_count(); ++i) ++counts[g.degree(i)];
  return DegreeHistogram::from_counts(std::move(counts));
}

PowerLawFit power_law_fit(const DegreeHistogram& h) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [k, count] : h.counts) {
    if (k == 0 || count == 0) continue;
    xs.push_back(std::log(static_cast<double>(k)));
    ys.push_back(std::log(h.probability(k)));
  }
  if (xs.size() < 2) {
    throw InvalidArgument("power_law_fit: need at least two distinct nonzero degrees, found " +
                          std::to_string(xs.size()));
  }

  const double n = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }

  PowerLawFit fit;
  const double slope = sxy / sxx;
  fit.lambda = slope == 0.0 ? 0.0 : -slope;
  // A flat histogram is fitted exactly by a zero slope.
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp((sxy * sxy) / (sxx * syy), 0.0, 1.0);
  return fit;
}

NetworkStats summary_stats(const Graph& g) {
  if (g.edge_count() == 0) throw InvalidArgument("summary_stats: graph has no edges");
  if (!is_connected(g)) throw InvalidArgument("summary_stats: graph is not connected; extract the GCC first");

  NetworkStats stats;
  stats.nodes = g.node_count();
  stats.edges = g.edge_count();
  const double n = static_cast<double>(stats.nodes);
  stats.density = 2.0 * static_cast<double>(stats.edges) / (n * (n - 1.0));

  const DegreeHistogram h = degree_histogram(g);
  stats.mean_degree = h.mean_degree;
  stats.second_moment = h.second_moment;
  stats.beta_prime = epidemic_threshold(h).beta_prime_percent;

  std::size_t usable_degrees = 0;
  for (const auto& [k, count] : h.counts) usable_degrees += (k > 0 && count > 0) ? 1 : 0;
  if (usable_degrees >= 2) stats.power_law = power_law_fit(h);

  const auto shells = shell_decomposition(g);
  stats.max_shell = static_cast<std::size_t>(*std::max_element(shells.values.begin(), shells.values.end()));
  return stats;
}

std::string stats_csv(const std::string& name, const NetworkStats& stats) {
  std::string out = kStatsCsvHeader;
  out += '\n';
  out += name + ',' + std::to_string(stats.nodes) + ',' + std::to_string(stats.edges) + ',' +
         format_double(stats.density) + ',' + format_double(stats.beta_prime) + ',';
  if (stats.power_law) {
    out += format_double(stats.power_law->lambda) + ',' + format_double(stats.power_law->r_squared);
  } else {
    out += ',';
  }
  out += ',' + format_double(stats.mean_degree) + ',' + format_double(stats.second_moment) + ',' +
         std::to_string(stats.max_shell) + '\n';
  return out;
}

}  // namespace spreadbench
