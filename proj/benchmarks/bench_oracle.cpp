#include <benchmark/benchmark.h>

#include "spreadbench/oracle.hpp"
#include "spreadbench/synthetic.hpp"

using namespace spreadbench;

static void BM_ExactAllSpreads(benchmark::State& state) {
  const auto extra = static_cast<std::size_t>(state.range(0));
  const Graph g = random_connected(9, extra, 3);
  state.counters["edges"] = static_cast<double>(g.edge_count());
  for (auto _ : state) {
    auto spreads = exact_all_spreads(g, InfectionProbability::from_fraction(0.3));
    benchmark::DoNotOptimize(spreads.data());
  }
}
BENCHMARK(BM_ExactAllSpreads)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
