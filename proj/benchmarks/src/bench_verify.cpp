#include <benchmark/benchmark.h>

#include "deckclass/verifier.hpp"

using namespace deckclass;

static void BM_VerifyClassTwo(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  Graph g = glue_at_vertex(cycle_graph(3), 0, cycle_graph(len), 0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_class2(g));
}
BENCHMARK(BM_VerifyClassTwo)->Arg(5)->Arg(7)->Arg(9);

static void BM_VerifyClassThreeNull(benchmark::State& state) {
  Graph g = cycle_graph(13);
  for (auto _ : state) benchmark::DoNotOptimize(verify_class3_null(g));
}
BENCHMARK(BM_VerifyClassThreeNull);

static void BM_VerifyCoreIdentities(benchmark::State& state) {
  CoreKernelParams p;
  p.k = 3;
  p.m = 1;
  p.sigma = {Rational(1, 2)};
  p.tau = {{{3, Rational(1, 2)}}};
  p.gamma = {{3, Rational(-1, 4)}};
  CoreKernelSpec s = build_core_kernel(p);
  for (auto _ : state) benchmark::DoNotOptimize(verify_core_identities(s));
}
BENCHMARK(BM_VerifyCoreIdentities)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
