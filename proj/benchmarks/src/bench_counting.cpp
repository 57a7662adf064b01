#include <benchmark/benchmark.h>

#include "deckclass/canonical.hpp"
#include "deckclass/patterns.hpp"

using namespace deckclass;

static void BM_CountVectorCycle(benchmark::State& state) {
  Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_vector(g));
}
BENCHMARK(BM_CountVectorCycle)->Arg(8)->Arg(12)->Arg(16);

static void BM_CountVectorPetersen(benchmark::State& state) {
  Graph g = petersen_graph();
  for (auto _ : state) benchmark::DoNotOptimize(count_vector(g));
}
BENCHMARK(BM_CountVectorPetersen);

static void BM_CountSubgraphsInK(benchmark::State& state) {
  Graph host = complete_graph(static_cast<int>(state.range(0)));
  Graph pattern = pattern_info(PatternId::C3_O_C5).graph;
  for (auto _ : state) benchmark::DoNotOptimize(count_subgraphs(host, pattern));
}
BENCHMARK(BM_CountSubgraphsInK)->Arg(6)->Arg(7)->Arg(8);

static void BM_CanonicalForm(benchmark::State& state) {
  Graph g = petersen_graph();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm);

BENCHMARK_MAIN();
