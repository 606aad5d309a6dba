#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/output.hpp"
#include "spreadbench/error.hpp"

namespace {

using spreadbench::cli::Command;

struct Flag {
  const char* name;
  const char* key;
  const char* help;
};

constexpr Flag kCommonFlags[] = {
    {"--names", "names", "comma-separated output names, one per network"},
    {"--out", "out", "output directory"},
    {"--workers", "workers", "worker threads (0: hardware concurrency)"},
    {"--seed", "seed", "master seed"},
};

constexpr Flag kMeasureFlags[] = {
    {"--measures", "measures", "comma-separated measures or 'all'"},
    {"--pagerank", "pagerank", "pagerank variant: damped or pure"},
    {"--damping", "damping", "pagerank damping factor"},
};

constexpr Flag kBetaFlags[] = {
    {"--beta-percent", "beta_percent", "infection probability in percent (comma list)"},
    {"--beta-multiple", "beta_multiple", "infection probability as multiples of the epidemic threshold"},
};

constexpr Flag kSimulationFlags[] = {
    {"--runs", "runs", "SIR replications per node"},
    {"--cache", "cache", "reuse cached simulations: true or false"},
};

constexpr Flag kImprecisionFlags[] = {
    {"--x", "x", "curve axis: p or beta"},
    {"--p-grid", "p_grid", "top-set percentages for x = p"},
    {"--p", "p", "top-set percentage for x = beta"},
    {"--scores", "scores", "extra measure from a CSV file, name=path (comma list)"},
    {"--diff", "diff", "measure differences a:b (comma list)"},
};

constexpr Flag kOracleFlags[] = {
    {"--node", "node", "report only this node label"},
};

struct Subcommand {
  Command command;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
  std::vector<std::pair<CLI::Option*, std::string>> options;
  std::vector<std::string> networks;
  std::string config_file;
  std::string dump_config;
};

template <std::size_t N>
void add_flags(Subcommand& sub, const Flag (&flags)[N]) {
  for (const auto& flag : flags) {
    auto* option = sub.app->add_option(flag.name, sub.values[flag.key], flag.help);
    sub.options.emplace_back(option, flag.key);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ranks network nodes by centrality and measures how well each ranking finds the strongest spreaders."};
  app.require_subcommand(1);

  std::vector<std::unique_ptr<Subcommand>> subs;
  auto make = [&](Command command, const char* name, const char* help) -> Subcommand& {
    auto sub = std::make_unique<Subcommand>();
    sub->command = command;
    sub->app = app.add_subcommand(name, help);
    sub->app->add_option("networks", sub->networks, "edge-list files");
    sub->app->add_option("--config", sub->config_file, "key = value settings file");
    sub->app->add_option("--dump-config", sub->dump_config, "write the effective settings to this file");
    add_flags(*sub, kCommonFlags);
    subs.push_back(std::move(sub));
    return *subs.back();
  };

  make(Command::stats, "stats", "degree statistics and epidemic threshold");
  auto& centrality = make(Command::centrality, "centrality", "centrality scores");
  add_flags(centrality, kMeasureFlags);
  auto& spread = make(Command::spread, "spread", "Monte-Carlo SIR spreading power of every node");
  add_flags(spread, kBetaFlags);
  add_flags(spread, kSimulationFlags);
  auto& oracle = make(Command::oracle, "oracle", "exact spreading power on small graphs");
  add_flags(oracle, kBetaFlags);
  add_flags(oracle, kOracleFlags);
  auto& imprecision = make(Command::imprecision, "imprecision", "imprecision curves of centrality measures");
  add_flags(imprecision, kMeasureFlags);
  add_flags(imprecision, kBetaFlags);
  add_flags(imprecision, kSimulationFlags);
  add_flags(imprecision, kImprecisionFlags);

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& sub : subs) {
      if (!sub->app->parsed()) continue;
      spreadbench::cli::ExperimentConfig config;
      if (!sub->config_file.empty()) spreadbench::cli::apply_config_file(config, sub->config_file);
      spreadbench::cli::apply_environment(config);
      for (const auto& [option, key] : sub->options) {
        if (option->count() > 0) spreadbench::cli::apply_setting(config, key, sub->values[key]);
      }
      if (!sub->networks.empty()) config.networks = sub->networks;
      if (!sub->dump_config.empty()) {
        spreadbench::cli::write_file_atomically(sub->dump_config, spreadbench::cli::to_text(config));
      }
      spreadbench::cli::run_command(sub->command, config, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
