#include <benchmark/benchmark.h>

#include "spreadbench/epidemic.hpp"
#include "spreadbench/synthetic.hpp"

using namespace spreadbench;

static void BM_SingleRun(benchmark::State& state) {
  const Graph g = barabasi_albert(static_cast<std::size_t>(state.range(0)), 3, 7);
  SirSimulator sim(g);
  const auto beta = InfectionProbability::from_percent(5.0);
  std::uint64_t r = 0;
  std::size_t total = 0;
  for (auto _ : state) {
    total += sim.run(0, beta, replication_stream(1, 0, r++));
  }
  benchmark::DoNotOptimize(total);
}
BENCHMARK(BM_SingleRun)->Arg(1000)->Arg(10000);

static void BM_AllSpreads(benchmark::State& state) {
  const Graph g = barabasi_albert(500, 2, 11);
  const auto beta = InfectionProbability::from_percent(8.0);
  for (auto _ : state) {
    auto est = all_spreads(g, beta, static_cast<std::size_t>(state.range(0)), 42, 1);
    benchmark::DoNotOptimize(est.mean.data());
  }
}
BENCHMARK(BM_AllSpreads)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
