#include "cli/commands.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "cli/output.hpp"
#include "spreadbench/centrality.hpp"
#include "spreadbench/error.hpp"
#include "spreadbench/format.hpp"
#include "spreadbench/imprecision.hpp"
#include "spreadbench/oracle.hpp"
#include "spreadbench/random.hpp"
#include "spreadbench/stats.hpp"

namespace spreadbench::cli {

namespace {

std::vector<std::string> network_names(const ExperimentConfig& c) {
  std::vector<std::string> names = c.names;
  if (names.empty()) {
    for (const auto& path : c.networks) names.push_back(std::filesystem::path(path).stem().string());
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty() || names[i].find_first_of("/\\") != std::string::npos) {
      throw InvalidArgument("network name '" + names[i] + "' is not usable as a file name");
    }
    if (names[i] == kAverageNetwork || names[i] == kDifferenceNetwork) {
      throw InvalidArgument("network name '" + names[i] + "' is reserved");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw InvalidArgument("duplicate network name '" + names[i] + "'; set names");
    }
  }
  return names;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<InfectionProbability> resolve_betas(const ExperimentConfig& c, const Graph& g,
                                                const std::vector<double>& default_multiples) {
  std::vector<InfectionProbability> betas;
  for (double percent : c.beta_percent) betas.push_back(InfectionProbability::from_percent(percent));
  if (!betas.empty()) return betas;
  const double beta_prime = epidemic_threshold(degree_histogram(g)).beta_prime;
  const auto& multiples = c.beta_multiple.empty() ? default_multiples : c.beta_multiple;
  for (double m : multiples) {
    try {
      betas.push_back(InfectionProbability::from_fraction(m * beta_prime));
    } catch (const InvalidArgument&) {
      throw InvalidArgument("beta multiple " + format_double(m) + " of beta' = " +
                            format_double(100.0 * beta_prime) + "% exceeds 100%");
    }
  }
  return betas;
}

CentralityOptions centrality_options(const ExperimentConfig& c) {
  CentralityOptions options;
  options.pagerank_variant = c.pagerank_variant;
  options.damping = c.damping;
  options.workers = c.workers;
  return options;
}

std::string indexed_name(const std::string& base, const std::string& kind, std::size_t index, std::size_t count) {
  if (count == 1) return base + "." + kind + ".csv";
  return base + "." + kind + "." + std::to_string(index + 1) + ".csv";
}

std::string centrality_csv(const Graph& g, const CentralityScores& scores) {
  std::string out = "node_label,score\n";
  for (NodeId i : rank_nodes(scores).order) out += g.label(i) + ',' + format_double(scores.values[i]) + '\n';
  return out;
}

void log_written(std::ostream& log, const WrittenFiles& files) {
  for (const auto& f : files) log << "wrote " << f.string() << '\n';
}

std::vector<std::pair<std::string, std::string>> diff_pairs(const ExperimentConfig& c,
                                                            const std::vector<ImprecisionCurve>& curves) {
  auto has = [&curves](const std::string& m) {
    return std::any_of(curves.begin(), curves.end(), [&m](const auto& curve) { return curve.measure == m; });
  };
  std::vector<std::pair<std::string, std::string>> pairs;
  if (c.diff.empty()) {
    if (has("kshell") && has("eigenvector")) pairs.emplace_back("kshell", "eigenvector");
    return pairs;
  }
  for (const auto& entry : c.diff) {
    const auto colon = entry.find(':');
    std::pair<std::string, std::string> pair{entry.substr(0, colon), entry.substr(colon + 1)};
    for (const auto& m : {pair.first, pair.second}) {
      if (!has(m)) throw InvalidArgument("diff: measure '" + m + "' is not among the evaluated measures");
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::vector<ImprecisionCurve> differences(const std::vector<ImprecisionCurve>& curves,
                                          const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto find = [&curves](const std::string& m) -> const ImprecisionCurve& {
    return *std::find_if(curves.begin(), curves.end(), [&m](const auto& c) { return c.measure == m; });
  };
  std::vector<ImprecisionCurve> out;
  for (const auto& [a, b] : pairs) out.push_back(pairwise_difference(find(a), find(b)));
  return out;
}

}  // namespace

LoadedNetwork load_network(const std::string& path, const std::string& name, std::ostream& log) {
  const Graph full = read_edge_list(path);
  LoadedNetwork loaded{name, greatest_connected_component(full)};
  log << "network '" << name << "': " << full.node_count() << " nodes, " << full.edge_count() << " edges; GCC "
      << loaded.graph.node_count() << " nodes, " << loaded.graph.edge_count() << " edges\n";
  return loaded;
}

SpreadCache::SpreadCache(std::filesystem::path directory, bool enabled)
    : directory_(std::move(directory)), enabled_(enabled) {}

std::string SpreadCache::key(const Graph& g, InfectionProbability beta, std::size_t runs, std::uint64_t seed) {
  std::uint64_t h = content_hash(g);
  h = derive_key(h, std::bit_cast<std::uint64_t>(beta.fraction()));
  h = derive_key(h, runs);
  h = derive_key(h, seed);
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
  return buffer;
}

SpreadEstimate SpreadCache::get(const Graph& g, InfectionProbability beta, std::size_t runs, std::uint64_t seed,
                                unsigned workers, std::ostream& log) {
  const auto path = directory_ / ("spread-" + key(g, beta, runs, seed) + ".csv");
  if (enabled_ && std::filesystem::is_regular_file(path)) {
    std::stringstream in(read_text(path));
    std::string line;
    SpreadEstimate est;
    est.runs = runs;
    est.beta = beta;
    est.master_seed = seed;
    bool valid = static_cast<bool>(std::getline(in, line)) && line == kSpreadCsvHeader;
    NodeId next = 0;
    while (valid && std::getline(in, line)) {
      const auto fields = split_csv_line(line);
      valid = fields.size() == 5 && next < g.node_count() && fields[0] == g.label(next);
      if (!valid) break;
      est.mean.push_back(parse_double(fields[1]));
      est.std_error.push_back(parse_double(fields[2]));
      ++next;
    }
    if (valid && next == g.node_count()) {
      log << "spread cache hit " << path.filename().string() << '\n';
      return est;
    }
    log << "ignoring stale spread cache " << path.filename().string() << '\n';
  }

  log << "simulating " << g.node_count() << " nodes x " << runs << " runs at beta = " << format_double(beta.percent())
      << "%\n";
  SpreadEstimate est = all_spreads(g, beta, runs, seed, workers);
  if (enabled_) {
    std::filesystem::create_directories(directory_);
    write_file_atomically(path, spread_csv(g, est));
  }
  return est;
}

std::vector<double> read_scores(const std::string& path, const Graph& g) {
  std::unordered_map<std::string, NodeId> index;
  for (NodeId i = 0; i < g.node_count(); ++i) index.emplace(g.label(i), i);
  std::vector<double> scores(g.node_count(), 0.0);
  std::vector<bool> seen(g.node_count(), false);

  std::stringstream in(read_text(path));
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (number == 1 || line.empty()) continue;  // header
    const auto fields = split_csv_line(line);
    if (fields.size() < 2) throw ParseError(path + ": expected node_label,score", number);
    const auto it = index.find(fields[0]);
    if (it == index.end()) continue;  // outside the GCC
    try {
      scores[it->second] = parse_double(fields[1]);
    } catch (const ParseError&) {
      throw ParseError(path + ": bad score '" + fields[1] + "'", number);
    }
    seen[it->second] = true;
  }
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (!seen[i]) throw InvalidArgument(path + ": no score for node '" + g.label(i) + "'");
  }
  return scores;
}

WrittenFiles cmd_stats(const ExperimentConfig& c, std::ostream& log) {
  validate(c, Command::stats);
  const auto names = network_names(c);
  OutputSet out(c.out);
  for (std::size_t i = 0; i < c.networks.size(); ++i) {
    const auto net = load_network(c.networks[i], names[i], log);
    out.write(net.name + ".stats.csv", stats_csv(net.name, summary_stats(net.graph)));
  }
  out.commit();
  log_written(log, out.files());
  return out.files();
}

WrittenFiles cmd_centrality(const ExperimentConfig& c, std::ostream& log) {
  validate(c, Command::centrality);
  const auto names = network_names(c);
  const auto measures = resolve_measures(c.measures);
  const auto options = centrality_options(c);
  OutputSet out(c.out);
  for (std::size_t i = 0; i < c.networks.size(); ++i) {
    const auto net = load_network(c.networks[i], names[i], log);
    for (Measure m : measures) {
      const auto scores = compute_measure(net.graph, m, options);
      out.write(net.name + "." + scores.measure + ".csv", centrality_csv(net.graph, scores));
    }
  }
  out.commit();
  log_written(log, out.files());
  return out.files();
}

WrittenFiles cmd_spread(const ExperimentConfig& c, std::ostream& log) {
  validate(c, Command::spread);
  const auto names = network_names(c);
  OutputSet out(c.out);
  SpreadCache cache(std::filesystem::path(c.out) / "cache", c.cache);
  for (std::size_t i = 0; i < c.networks.size(); ++i) {
    const auto net = load_network(c.networks[i], names[i], log);
    const auto betas = resolve_betas(c, net.graph, {});
    for (std::size_t b = 0; b < betas.size(); ++b) {
      const auto est = cache.get(net.graph, betas[b], c.runs, *c.seed, c.workers, log);
      out.write(indexed_name(net.name, "spread", b, betas.size()), spread_csv(net.graph, est));
    }
  }
  out.commit();
  log_written(log, out.files());
  return out.files();
}

WrittenFiles cmd_oracle(const ExperimentConfig& c, std::ostream& log) {
  validate(c, Command::oracle);
  const auto names = network_names(c);
  OutputSet out(c.out);
  for (std::size_t i = 0; i < c.networks.size(); ++i) {
    const auto net = load_network(c.networks[i], names[i], log);
    std::optional<NodeId> only;
    if (c.node) {
      for (NodeId v = 0; v < net.graph.node_count(); ++v) {
        if (net.graph.label(v) == *c.node) only = v;
      }
      if (!only) throw InvalidArgument("node '" + *c.node + "' is not in the GCC of " + net.name);
    }
    const auto betas = resolve_betas(c, net.graph, {});
    for (std::size_t b = 0; b < betas.size(); ++b) {
      const auto spreads = only ? std::vector<ExactSpread>{exact_influence_spread(net.graph, *only, betas[b])}
                                : exact_all_spreads(net.graph, betas[b], c.workers);
      out.write(indexed_name(net.name, "oracle", b, betas.size()), exact_spread_csv(net.graph, spreads));
    }
  }
  out.commit();
  log_written(log, out.files());
  return out.files();
}

WrittenFiles cmd_imprecision(const ExperimentConfig& c, std::ostream& log) {
  validate(c, Command::imprecision);
  const auto names = network_names(c);
  const auto measures = resolve_measures(c.measures);
  const auto options = centrality_options(c);
  OutputSet out(c.out);
  SpreadCache cache(std::filesystem::path(c.out) / "cache", c.cache);

  // curves_by_network[n][m] is the curve of measure m on network n.
  std::vector<std::vector<ImprecisionCurve>> curves_by_network;
  for (std::size_t i = 0; i < c.networks.size(); ++i) {
    const auto net = load_network(c.networks[i], names[i], log);
    const Graph& g = net.graph;

    std::vector<CentralityScores> scores;
    for (Measure m : measures) scores.push_back(compute_measure(g, m, options));
    for (const auto& entry : c.scores) {
      const auto eq = entry.find('=');
      scores.push_back({entry.substr(0, eq), read_scores(entry.substr(eq + 1), g)});
    }

    std::vector<ImprecisionCurve> curves;
    if (c.x == "p") {
      const auto beta = resolve_betas(c, g, {1.1}).front();
      const auto spreads = cache.get(g, beta, c.runs, *c.seed, c.workers, log);
      for (const auto& s : scores) curves.push_back(imprecision_curve(spreads, s, c.p_grid));
    } else {
      BetaSweepOptions sweep;
      sweep.beta_percents = c.beta_percent;
      if (!c.beta_multiple.empty()) sweep.beta_multiples = c.beta_multiple;
      sweep.p = c.p;
      sweep.runs = c.runs;
      sweep.master_seed = *c.seed;
      sweep.workers = c.workers;
      sweep.spreads = [&](InfectionProbability beta) { return cache.get(g, beta, c.runs, *c.seed, c.workers, log); };
      curves = beta_sweep(g, scores, sweep);
    }
    for (auto& curve : curves) curve.network = net.name;

    out.write(net.name + ".imprecision.csv", curves_csv(curves));
    const auto diffs = differences(curves, diff_pairs(c, curves));
    if (!diffs.empty()) out.write(net.name + ".diff.csv", curves_csv(diffs));
    curves_by_network.push_back(std::move(curves));
  }

  if (curves_by_network.size() > 1) {
    std::vector<ImprecisionCurve> averages;
    try {
      for (std::size_t m = 0; m < curves_by_network.front().size(); ++m) {
        std::vector<ImprecisionCurve> per_network;
        for (const auto& curves : curves_by_network) per_network.push_back(curves[m]);
        averages.push_back(average_curves(per_network));
      }
    } catch (const InvalidArgument& e) {
      averages.clear();
      log << "skipping cross-network average: " << e.what() << '\n';
    }
    if (!averages.empty()) {
      out.write(std::string(kAverageNetwork) + ".imprecision.csv", curves_csv(averages));
      const auto diffs = differences(averages, diff_pairs(c, averages));
      if (!diffs.empty()) out.write(std::string(kAverageNetwork) + ".diff.csv", curves_csv(diffs));
    }
  }

  out.commit();
  log_written(log, out.files());
  return out.files();
}

WrittenFiles run_command(Command command, const ExperimentConfig& config, std::ostream& log) {
  switch (command) {
    case Command::stats: return cmd_stats(config, log);
    case Command::centrality: return cmd_centrality(config, log);
    case Command::spread: return cmd_spread(config, log);
    case Command::oracle: return cmd_oracle(config, log);
    case Command::imprecision: return cmd_imprecision(config, log);
  }
  throw InvalidArgument("unknown command");
}

}  // namespace spreadbench::cli
