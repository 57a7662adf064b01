#include <benchmark/benchmark.h>

#include "deckclass/classifier.hpp"
#include "deckclass/patterns.hpp"

using namespace deckclass;

static void BM_ClassifyGraph(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  Graph g = glue_at_vertex(cycle_graph(3), 0, cycle_graph(len), 0);
  for (auto _ : state) benchmark::DoNotOptimize(classify_graph(g));
}
BENCHMARK(BM_ClassifyGraph)->Arg(5)->Arg(7)->Arg(9);

static void BM_ClassifyCounts(benchmark::State& state) {
  CountVector cv = count_vector(disjoint_union(cycle_graph(5), cycle_graph(7)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_counts(cv, 12));
}
BENCHMARK(BM_ClassifyCounts);

BENCHMARK_MAIN();
