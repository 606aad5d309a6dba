#include <benchmark/benchmark.h>

#include "spreadbench/centrality.hpp"
#include "spreadbench/synthetic.hpp"

using namespace spreadbench;

static void BM_Measure(benchmark::State& state) {
  const auto measure = kAllMeasures[static_cast<std::size_t>(state.range(0))];
  const Graph g = barabasi_albert(2000, 3, 5);
  state.SetLabel(std::string(measure_name(measure)));
  for (auto _ : state) {
    auto scores = compute_measure(g, measure);
    benchmark::DoNotOptimize(scores.values.data());
  }
}
BENCHMARK(BM_Measure)->DenseRange(0, static_cast<int>(kAllMeasures.size()) - 1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
