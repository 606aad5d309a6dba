#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "spreadbench/error.hpp"
#include "spreadbench/format.hpp"
#include "spreadbench/imprecision.hpp"
#include "spreadbench/stats.hpp"
#include "spreadbench/synthetic.hpp"

namespace spreadbench::cli {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::vector<std::string>> rows_of(const fs::path& path) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream in(slurp(path));
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::stringstream fs_(line);
    std::string f;
    while (std::getline(fs_, f, ',')) fields.push_back(f);
    rows.push_back(fields);
  }
  return rows;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("spreadbench_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& contents) {
    const auto path = dir_ / name;
    std::ofstream(path, std::ios::binary) << contents;
    return path.string();
  }
  std::string write_graph(const std::string& name, const Graph& g) { return write(name, to_edge_list(g)); }

  ExperimentConfig config(std::vector<std::string> networks) {
    ExperimentConfig c;
    c.networks = std::move(networks);
    c.out = (dir_ / "out").string();
    c.workers = 1;
    return c;
  }
  fs::path out(const std::string& file) const { return dir_ / "out" / file; }

  fs::path dir_;
  std::ostringstream log_;
};

TEST_F(CliTest, ConfigRoundTrip) {
  ExperimentConfig c;
  c.networks = {"a.txt", "b.txt"};
  c.names = {"a", "b"};
  c.measures = {"degree", "nghd3"};
  c.beta_multiple = {1.1, 1.7};
  c.p_grid = {0.5, 2.5};
  c.x = "beta";
  c.p = 7.5;
  c.runs = 123;
  c.seed = 18446744073709551615ull;
  c.out = "results";
  c.pagerank_variant = PageRankVariant::pure;
  c.damping = 0.7;
  c.workers = 3;
  c.node = "n1";
  c.scores = {"truth=t.csv"};
  c.diff = {"degree:nghd3"};
  c.cache = false;

  ExperimentConfig loaded;
  apply_config_text(loaded, to_text(c));
  EXPECT_EQ(loaded, c);

  ExperimentConfig defaults;
  apply_config_text(defaults, to_text(ExperimentConfig{}));
  EXPECT_EQ(defaults, ExperimentConfig{});
}

TEST_F(CliTest, ConfigErrorsCarryLineNumbers) {
  ExperimentConfig c;
  try {
    apply_config_text(c, "# comment\nruns = 5\nruns = many\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(apply_config_text(c, "colour = blue\n"), ParseError);
  EXPECT_THROW(apply_config_text(c, "x = q\n"), ParseError);
}

TEST_F(CliTest, EnvironmentOverridesConfig) {
  ExperimentConfig c;
  apply_config_text(c, "runs = 5\nworkers = 2\n");
  ::setenv("SPREADBENCH_RUNS", "9", 1);
  apply_environment(c);
  ::unsetenv("SPREADBENCH_RUNS");
  EXPECT_EQ(c.runs, 9u);
  EXPECT_EQ(c.workers, 2u);
}

TEST_F(CliTest, StatsCompleteGraphRow) {
  const auto k4 = write_graph("k4.txt", complete_graph(4));
  const auto files = cmd_stats(config({k4}), log_);
  ASSERT_EQ(files.size(), 1u);
  const auto rows = rows_of(out("k4.stats.csv"));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0][0], "k4");
  EXPECT_EQ(rows[0][1], "4");
  EXPECT_EQ(rows[0][2], "6");
  EXPECT_EQ(rows[0][3], "1");
}

TEST_F(CliTest, StatsLogsComponentExtraction) {
  const auto path = write("two.txt", "a b\nb c\nx y\n");
  cmd_stats(config({path}), log_);
  EXPECT_NE(log_.str().find("5 nodes, 3 edges; GCC 3 nodes, 2 edges"), std::string::npos) << log_.str();
  const auto rows = rows_of(out("two.stats.csv"));
  EXPECT_EQ(rows[0][1], "3");
}

TEST_F(CliTest, MalformedEdgeListNamesLine) {
  const auto path = write("bad.txt", "a b\nlonely\n");
  try {
    cmd_stats(config({path}), log_);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("bad.txt"), std::string::npos);
  }
}

TEST_F(CliTest, CentralityTwoMeasuresOnK4) {
  auto c = config({write_graph("k4.txt", complete_graph(4))});
  c.measures = {"degree", "kshell"};
  const auto files = cmd_centrality(c, log_);
  ASSERT_EQ(files.size(), 2u);
  for (const auto* name : {"k4.degree.csv", "k4.kshell.csv"}) {
    EXPECT_EQ(slurp(out(name)).substr(0, 17), "node_label,score\n");
    const auto rows = rows_of(out(name));
    ASSERT_EQ(rows.size(), 4u);
    for (const auto& row : rows) EXPECT_EQ(row[1], "3");
  }
}

TEST_F(CliTest, CentralityRowsInRankingOrder) {
  auto c = config({write_graph("star.txt", star_graph(4))});
  c.measures = {"degree"};
  cmd_centrality(c, log_);
  const auto rows = rows_of(out("star.degree.csv"));
  EXPECT_EQ(rows[0][1], "4");
  EXPECT_EQ(rows[1][1], "1");
}

TEST_F(CliTest, UnknownMeasureListsValidTokens) {
  auto c = config({write_graph("k4.txt", complete_graph(4))});
  c.measures = {"degree", "fame"};
  try {
    cmd_centrality(c, log_);
    FAIL() << "expected InvalidArgument";
  } catch (const InvalidArgument& e) {
    const std::string message = e.what();
    EXPECT_NE(message.find("fame"), std::string::npos);
    for (Measure m : kAllMeasures) EXPECT_NE(message.find(measure_name(m)), std::string::npos);
  }
  EXPECT_FALSE(fs::exists(out("k4.degree.csv")));
}

TEST_F(CliTest, AllMeasuresWritesTenFiles) {
  auto c = config({write_graph("ba.txt", barabasi_albert(40, 2, 3))});
  c.measures = {"all"};
  const auto files = cmd_centrality(c, log_);
  EXPECT_EQ(files.size(), 10u);
  for (Measure m : kAllMeasures) EXPECT_TRUE(fs::exists(out("ba." + std::string(measure_name(m)) + ".csv")));
}

TEST_F(CliTest, SpreadAtCertaintyReachesEveryNode) {
  auto c = config({write_graph("ba.txt", barabasi_albert(30, 2, 9))});
  c.beta_percent = {100};
  c.runs = 5;
  c.seed = 1;
  cmd_spread(c, log_);
  const auto rows = rows_of(out("ba.spread.csv"));
  ASSERT_EQ(rows.size(), 30u);
  for (const auto& row : rows) {
    EXPECT_EQ(row[1], "30");
    EXPECT_EQ(row[2], "0");
    EXPECT_EQ(row[3], "5");
    EXPECT_EQ(row[4], "100");
  }
}

TEST_F(CliTest, SpreadRecordsResolvedBetaMultiple) {
  const Graph g = star_graph(20);
  auto c = config({write_graph("star.txt", g)});
  c.beta_multiple = {1.1};
  c.runs = 10;
  c.seed = 3;
  cmd_spread(c, log_);
  const double beta_prime = epidemic_threshold(degree_histogram(g)).beta_prime;
  const auto expected = format_double(InfectionProbability::from_fraction(1.1 * beta_prime).percent());
  for (const auto& row : rows_of(out("star.spread.csv"))) EXPECT_EQ(row[4], expected);
}

TEST_F(CliTest, SpreadBetaListWritesOneFileEach) {
  auto c = config({write_graph("ba.txt", barabasi_albert(20, 2, 9))});
  c.beta_percent = {10, 20};
  c.runs = 10;
  c.seed = 3;
  const auto files = cmd_spread(c, log_);
  ASSERT_EQ(files.size(), 2u);
  EXPECT_EQ(rows_of(out("ba.spread.1.csv"))[0][4], "10");
  EXPECT_EQ(rows_of(out("ba.spread.2.csv"))[0][4], "20");
}

TEST_F(CliTest, SpreadRequiresSeed) {
  auto c = config({write_graph("k4.txt", complete_graph(4))});
  c.beta_percent = {10};
  EXPECT_THROW(cmd_spread(c, log_), InvalidArgument);
}

TEST_F(CliTest, SpreadRerunIsByteIdentical) {
  auto c = config({write_graph("ba.txt", barabasi_albert(60, 2, 4))});
  c.beta_percent = {12};
  c.runs = 200;
  c.seed = 77;
  c.cache = false;
  cmd_spread(c, log_);
  const auto first = slurp(out("ba.spread.csv"));
  c.workers = 4;
  cmd_spread(c, log_);
  EXPECT_EQ(slurp(out("ba.spread.csv")), first);
}

TEST_F(CliTest, SpreadCacheHitsAndRecoversFromDamage) {
  auto c = config({write_graph("ba.txt", barabasi_albert(40, 2, 4))});
  c.beta_percent = {15};
  c.runs = 100;
  c.seed = 5;
  cmd_spread(c, log_);
  const auto first = slurp(out("ba.spread.csv"));
  std::vector<fs::path> cached;
  for (const auto& entry : fs::directory_iterator(out("cache"))) cached.push_back(entry.path());
  ASSERT_EQ(cached.size(), 1u);

  log_.str("");
  cmd_spread(c, log_);
  EXPECT_NE(log_.str().find("cache hit"), std::string::npos);
  EXPECT_EQ(slurp(out("ba.spread.csv")), first);

  std::ofstream(cached[0], std::ios::trunc) << "garbage\n";
  log_.str("");
  cmd_spread(c, log_);
  EXPECT_NE(log_.str().find("stale"), std::string::npos);
  EXPECT_EQ(slurp(out("ba.spread.csv")), first);
}

TEST_F(CliTest, CacheKeyDependsOnEveryInput) {
  const Graph g = barabasi_albert(20, 2, 1);
  const auto beta = InfectionProbability::from_percent(10);
  const auto base = SpreadCache::key(g, beta, 100, 1);
  EXPECT_EQ(base, SpreadCache::key(g, beta, 100, 1));
  EXPECT_NE(base, SpreadCache::key(g, InfectionProbability::from_percent(11), 100, 1));
  EXPECT_NE(base, SpreadCache::key(g, beta, 101, 1));
  EXPECT_NE(base, SpreadCache::key(g, beta, 100, 2));
  EXPECT_NE(base, SpreadCache::key(barabasi_albert(20, 2, 2), beta, 100, 1));
}

TEST_F(CliTest, OracleTriangleAtHalf) {
  auto c = config({write("tri.txt", "a b\nb c\nc a\n")});
  c.beta_percent = {50};
  cmd_oracle(c, log_);
  const auto rows = rows_of(out("tri.oracle.csv"));
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    EXPECT_EQ(row[1], "2.25");
    EXPECT_EQ(row[2], "0");
    EXPECT_EQ(row[3], "0");
    EXPECT_EQ(row[4], "50");
  }
}

TEST_F(CliTest, OracleAtZeroIsOne) {
  auto c = config({write_graph("k5.txt", complete_graph(5))});
  c.beta_percent = {0};
  cmd_oracle(c, log_);
  for (const auto& row : rows_of(out("k5.oracle.csv"))) EXPECT_EQ(row[1], "1");
}

TEST_F(CliTest, OracleSingleNode) {
  auto c = config({write("tri.txt", "a b\nb c\nc a\nc d\n")});
  c.beta_percent = {50};
  c.node = "d";
  cmd_oracle(c, log_);
  const auto rows = rows_of(out("tri.oracle.csv"));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0][0], "d");
  c.node = "zz";
  EXPECT_THROW(cmd_oracle(c, log_), InvalidArgument);
}

TEST_F(CliTest, OracleRejectsLargeGraphs) {
  auto c = config({write_graph("big.txt", random_connected(12, 19, 2))});
  c.beta_percent = {50};
  try {
    cmd_oracle(c, log_);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("2^24"), std::string::npos) << e.what();
  }
}

TEST_F(CliTest, FailedCommandRemovesEarlierOutputs) {
  auto c = config({write("tri.txt", "a b\nb c\nc a\n"), write_graph("big.txt", random_connected(12, 19, 2))});
  c.beta_percent = {50};
  EXPECT_THROW(cmd_oracle(c, log_), Error);
  EXPECT_FALSE(fs::exists(out("tri.oracle.csv")));
  for (const auto& entry : fs::directory_iterator(dir_ / "out")) {
    EXPECT_EQ(entry.path().extension(), "") << entry.path();
  }
}

TEST_F(CliTest, NamesMustBeUniqueAndUnreserved) {
  const auto a = write_graph("a.txt", complete_graph(3));
  auto c = config({a, a});
  EXPECT_THROW(cmd_stats(c, log_), InvalidArgument);
  c.names = {"x", "__average__"};
  EXPECT_THROW(cmd_stats(c, log_), InvalidArgument);
  c.names = {"x", "y"};
  EXPECT_EQ(cmd_stats(c, log_).size(), 2u);
}

TEST_F(CliTest, InjectedPerfectMeasureGivesZeroCurve) {
  const auto path = write_graph("ba.txt", barabasi_albert(40, 2, 8));
  const Graph g = load_network(path, "ba", log_).graph;
  const auto beta = InfectionProbability::from_percent(20);
  const auto truth = all_spreads(g, beta, 300, 11, 1);
  std::string scores = "node_label,score\n";
  for (NodeId i = 0; i < g.node_count(); ++i) scores += g.label(i) + "," + format_double(truth.mean[i]) + "\n";

  auto c = config({path});
  c.measures = {"degree"};
  c.scores = {"perfect=" + write("perfect.csv", scores)};
  c.beta_percent = {20};
  c.runs = 300;
  c.seed = 11;
  cmd_imprecision(c, log_);
  std::size_t perfect_rows = 0;
  for (const auto& row : rows_of(out("ba.imprecision.csv"))) {
    if (row[1] != "perfect") continue;
    ++perfect_rows;
    EXPECT_EQ(row[7], "0");
  }
  EXPECT_EQ(perfect_rows, 10u);
}

TEST_F(CliTest, InjectedScoresMustCoverEveryNode) {
  auto c = config({write_graph("k4.txt", complete_graph(4))});
  c.measures = {"degree"};
  c.scores = {"partial=" + write("partial.csv", "node_label,score\n0,1\n1,2\n")};
  c.beta_percent = {20};
  c.seed = 1;
  c.runs = 10;
  EXPECT_THROW(cmd_imprecision(c, log_), InvalidArgument);
}

TEST_F(CliTest, TwoNetworksProduceAverages) {
  auto c = config({write_graph("a.txt", barabasi_albert(50, 2, 1)), write_graph("b.txt", barabasi_albert(60, 2, 2))});
  c.measures = {"degree", "kshell", "eigenvector"};
  c.beta_percent = {15};
  c.runs = 50;
  c.seed = 2;
  const auto files = cmd_imprecision(c, log_);
  EXPECT_EQ(files.size(), 6u);
  const auto rows = rows_of(out("__average__.imprecision.csv"));
  EXPECT_EQ(rows.size(), 30u);
  for (const auto& row : rows) EXPECT_EQ(row[0], "__average__");
  const auto diff = rows_of(out("__average__.diff.csv"));
  ASSERT_EQ(diff.size(), 10u);
  EXPECT_EQ(diff[0][1], "kshell-eigenvector");
}

TEST_F(CliTest, BetaSweepShape) {
  const Graph g = barabasi_albert(80, 2, 5);
  auto c = config({write_graph("ba.txt", g)});
  c.measures = {"degree", "kshell"};
  c.x = "beta";
  c.p = 5;
  c.runs = 40;
  c.seed = 6;
  c.diff = {"degree:kshell"};
  cmd_imprecision(c, log_);
  const auto rows = rows_of(out("ba.imprecision.csv"));
  ASSERT_EQ(rows.size(), 20u);
  const double beta_prime = epidemic_threshold(degree_histogram(g)).beta_prime;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i][5], "beta_percent");
    const double multiple = kDefaultBetaMultiples[i % 10];
    EXPECT_NEAR(parse_double(rows[i][6]), 100.0 * multiple * beta_prime, 1e-9);
    EXPECT_EQ(rows[i][2], rows[i][6]);
  }
  EXPECT_EQ(rows_of(out("ba.diff.csv")).size(), 10u);
}

TEST_F(CliTest, ImprecisionIndependentOfWorkers) {
  auto c = config({write_graph("ba.txt", barabasi_albert(70, 2, 12))});
  c.measures = {"all"};
  c.beta_percent = {18};
  c.runs = 60;
  c.seed = 99;
  c.cache = false;
  cmd_imprecision(c, log_);
  const auto single = slurp(out("ba.imprecision.csv"));
  c.workers = 4;
  cmd_imprecision(c, log_);
  EXPECT_EQ(slurp(out("ba.imprecision.csv")), single);
}

TEST_F(CliTest, PointModeTakesOneBeta) {
  auto c = config({write_graph("k4.txt", complete_graph(4))});
  c.beta_percent = {10, 20};
  c.seed = 1;
  EXPECT_THROW(cmd_imprecision(c, log_), InvalidArgument);
}

#ifdef SPREADBENCH_CLI_PATH

int run_tool(const std::string& arguments) {
  const int status = std::system((std::string(SPREADBENCH_CLI_PATH) + " " + arguments + " 2>/dev/null").c_str());
  return WEXITSTATUS(status);
}

TEST_F(CliTest, ToolExitCodes) {
  const auto k4 = write_graph("k4.txt", complete_graph(4));
  const auto bad = write("bad.txt", "a b\nc\n");
  const auto out_dir = (dir_ / "out").string();
  EXPECT_EQ(run_tool("stats " + k4 + " --out " + out_dir), 0);
  EXPECT_NE(run_tool("stats " + bad + " --out " + out_dir), 0);
  EXPECT_NE(run_tool("centrality " + k4 + " --measures bogus --out " + out_dir), 0);
  EXPECT_NE(run_tool("frobnicate"), 0);
}

TEST_F(CliTest, ToolPrecedenceFileEnvFlag) {
  const auto k4 = write_graph("k4.txt", complete_graph(4));
  const auto cfg = write("run.cfg", "runs = 5\nworkers = 2\ndamping = 0.5\n");
  const auto dump = (dir_ / "dump.cfg").string();
  const auto command = "SPREADBENCH_WORKERS=3 SPREADBENCH_DAMPING=0.6 " + std::string(SPREADBENCH_CLI_PATH) +
                       " centrality " + k4 + " --measures degree --config " + cfg + " --damping 0.7 --out " +
                       (dir_ / "out").string() + " --dump-config " + dump + " 2>/dev/null";
  ASSERT_EQ(WEXITSTATUS(std::system(command.c_str())), 0);
  ExperimentConfig effective;
  apply_config_file(effective, dump);
  EXPECT_EQ(effective.runs, 5u);
  EXPECT_EQ(effective.workers, 3u);
  EXPECT_EQ(effective.damping, 0.7);
  EXPECT_EQ(effective.networks, std::vector<std::string>{k4});
}

#endif

}  // namespace
}  // namespace spreadbench::cli
