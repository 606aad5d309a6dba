#include "cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spreadbench/error.hpp"
#include "spreadbench/format.hpp"

namespace spreadbench::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += items[i];
  }
  return out;
}

std::string join(const std::vector<double>& values) {
  std::vector<std::string> items;
  for (double v : values) items.push_back(format_double(v));
  return join(items);
}

template <typename Int>
Int parse_integer(const std::string& key, const std::string& value) {
  Int out{};
  const auto result = std::from_chars(value.data(), value.data() + value.size(), out);
  if (result.ec != std::errc{} || result.ptr != value.data() + value.size()) {
    throw ParseError(key + ": expected a non-negative integer, got '" + value + "'", 0);
  }
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  try {
    return parse_double(value);
  } catch (const ParseError&) {
    throw ParseError(key + ": expected a number, got '" + value + "'", 0);
  }
}

std::vector<double> parse_reals(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const auto& item : split_list(value)) out.push_back(parse_real(key, item));
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  throw ParseError(key + ": expected true or false, got '" + value + "'", 0);
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "networks", "names", "measures", "beta_percent", "beta_multiple", "p_grid", "x",  "p",     "runs",
      "seed",     "out",   "pagerank", "damping",      "workers",       "node",   "scores", "diff", "cache",
  };
  return keys;
}

void apply_setting(ExperimentConfig& c, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "networks") {
    c.networks = split_list(value);
  } else if (key == "names") {
    c.names = split_list(value);
  } else if (key == "measures") {
    c.measures = split_list(value);
  } else if (key == "beta_percent") {
    c.beta_percent = parse_reals(key, value);
  } else if (key == "beta_multiple") {
    c.beta_multiple = parse_reals(key, value);
  } else if (key == "p_grid") {
    c.p_grid = parse_reals(key, value);
  } else if (key == "x") {
    if (value != "p" && value != "beta") throw ParseError("x: expected 'p' or 'beta', got '" + value + "'", 0);
    c.x = value;
  } else if (key == "p") {
    c.p = parse_real(key, value);
  } else if (key == "runs") {
    c.runs = parse_integer<std::size_t>(key, value);
  } else if (key == "seed") {
    if (value.empty()) {
      c.seed.reset();
    } else {
      c.seed = parse_integer<std::uint64_t>(key, value);
    }
  } else if (key == "out") {
    c.out = value.empty() ? "." : value;
  } else if (key == "pagerank") {
    if (value == "pure") {
      c.pagerank_variant = PageRankVariant::pure;
    } else if (value == "damped") {
      c.pagerank_variant = PageRankVariant::damped;
    } else {
      throw ParseError("pagerank: expected 'pure' or 'damped', got '" + value + "'", 0);
    }
  } else if (key == "damping") {
    c.damping = parse_real(key, value);
  } else if (key == "workers") {
    c.workers = parse_integer<unsigned>(key, value);
  } else if (key == "node") {
    if (value.empty()) {
      c.node.reset();
    } else {
      c.node = value;
    }
  } else if (key == "scores") {
    c.scores = split_list(value);
  } else if (key == "diff") {
    c.diff = split_list(value);
  } else if (key == "cache") {
    c.cache = parse_bool(key, value);
  } else {
    throw ParseError("unknown setting '" + key + "'", 0);
  }
}

void apply_config_text(ExperimentConfig& config, const std::string& text) {
  std::stringstream stream(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(stream, line)) {
    ++number;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", number);
    try {
      apply_setting(config, trim(stripped.substr(0, eq)), stripped.substr(eq + 1));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number);
    }
  }
}

void apply_config_file(ExperimentConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot open config file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    apply_config_text(config, buffer.str());
  } catch (const ParseError& e) {
    throw e.with_context(path);
  }
}

void apply_environment(ExperimentConfig& config) {
  for (const auto& key : config_keys()) {
    std::string name = kEnvPrefix;
    for (char ch : key) name += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (const char* value = std::getenv(name.c_str())) {
      try {
        apply_setting(config, key, value);
      } catch (const ParseError& e) {
        throw e.with_context(name);
      }
    }
  }
}

std::string to_text(const ExperimentConfig& c) {
  std::string out;
  auto line = [&out](const std::string& key, const std::string& value) { out += key + " = " + value + '\n'; };
  line("networks", join(c.networks));
  line("names", join(c.names));
  line("measures", join(c.measures));
  line("beta_percent", join(c.beta_percent));
  line("beta_multiple", join(c.beta_multiple));
  line("p_grid", join(c.p_grid));
  line("x", c.x);
  line("p", format_double(c.p));
  line("runs", std::to_string(c.runs));
  line("seed", c.seed ? std::to_string(*c.seed) : "");
  line("out", c.out);
  line("pagerank", c.pagerank_variant == PageRankVariant::pure ? "pure" : "damped");
  line("damping", format_double(c.damping));
  line("workers", std::to_string(c.workers));
  line("node", c.node.value_or(""));
  line("scores", join(c.scores));
  line("diff", join(c.diff));
  line("cache", c.cache ? "true" : "false");
  return out;
}

std::vector<Measure> resolve_measures(const std::vector<std::string>& tokens) {
  std::vector<Measure> out;
  auto add = [&out](Measure m) {
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  };
  for (const auto& token : tokens) {
    if (token == "all") {
      for (Measure m : kAllMeasures) add(m);
    } else if (const auto m = parse_measure(token)) {
      add(*m);
    } else {
      std::string valid = "all";
      for (Measure known : kAllMeasures) valid += ", " + std::string(measure_name(known));
      throw InvalidArgument("unknown measure '" + token + "'; valid measures: " + valid);
    }
  }
  return out;
}

void validate(const ExperimentConfig& c, Command command) {
  if (c.networks.empty()) throw InvalidArgument("no network edge-list given");
  for (const auto& path : c.networks) {
    if (!std::filesystem::is_regular_file(path)) throw InvalidArgument(path + ": no such file");
  }
  if (!c.names.empty() && c.names.size() != c.networks.size()) {
    throw InvalidArgument("names: expected " + std::to_string(c.networks.size()) + " names, got " +
                          std::to_string(c.names.size()));
  }
  if (c.runs == 0) throw InvalidArgument("runs must be at least 1");
  if (!(c.damping > 0.0 && c.damping <= 1.0)) throw InvalidArgument("damping must lie in (0, 1]");
  if (!c.beta_percent.empty() && !c.beta_multiple.empty()) {
    throw InvalidArgument("give either beta_percent or beta_multiple, not both");
  }
  if (command == Command::centrality || command == Command::imprecision) resolve_measures(c.measures);
  if ((command == Command::spread || command == Command::imprecision) && !c.seed) {
    throw InvalidArgument("a --seed is required for reproducible simulation");
  }
  if (command == Command::spread || command == Command::oracle) {
    if (c.beta_percent.empty() && c.beta_multiple.empty()) {
      throw InvalidArgument("give --beta-percent or --beta-multiple");
    }
  }
  if (command == Command::imprecision) {
    if (c.x == "p") {
      if (c.beta_percent.size() + c.beta_multiple.size() > 1) {
        throw InvalidArgument("x = p takes a single beta; use x = beta for a sweep");
      }
      if (c.p_grid.empty()) throw InvalidArgument("p_grid is empty");
      for (double p : c.p_grid) {
        if (!(p > 0.0 && p <= 100.0)) throw InvalidArgument("p_grid values must lie in (0, 100]");
      }
    } else if (!(c.p > 0.0 && c.p <= 100.0)) {
      throw InvalidArgument("p must lie in (0, 100]");
    }
    for (const auto& entry : c.scores) {
      const auto eq = entry.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size()) {
        throw InvalidArgument("scores: expected name=path, got '" + entry + "'");
      }
      if (!std::filesystem::is_regular_file(entry.substr(eq + 1))) {
        throw InvalidArgument(entry.substr(eq + 1) + ": no such score file");
      }
    }
    for (const auto& pair : c.diff) {
      const auto colon = pair.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == pair.size()) {
        throw InvalidArgument("diff: expected a:b, got '" + pair + "'");
      }
    }
  }
}

}  // namespace spreadbench::cli
