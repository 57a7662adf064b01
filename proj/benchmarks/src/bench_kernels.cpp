#include <benchmark/benchmark.h>

#include <random>

#include "deckclass/core_kernel.hpp"
#include "deckclass/kernel.hpp"
#include "deckclass/perturbation.hpp"

using namespace deckclass;

namespace {

StepKernel random_kernel(int n) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) a[i][j] = a[j][i] = ratio(d(rng), 3);
  return StepKernel(a);
}

}  // namespace

static void BM_HomDensityPetersen(benchmark::State& state) {
  StepKernel u = random_kernel(static_cast<int>(state.range(0)));
  Graph g = petersen_graph();
  for (auto _ : state) benchmark::DoNotOptimize(hom_density(g, u));
}
BENCHMARK(BM_HomDensityPetersen)->Arg(2)->Arg(4)->Arg(8);

static void BM_CycleDensity(benchmark::State& state) {
  StepKernel u = random_kernel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cycle_density(12, u));
}
BENCHMARK(BM_CycleDensity)->Arg(4)->Arg(16)->Arg(64);

static void BM_PerturbationCoefficients(benchmark::State& state) {
  StepKernel u = random_kernel(3);
  Graph g = glue_at_vertex(cycle_graph(3), 0, cycle_graph(5), 0);
  for (auto _ : state) benchmark::DoNotOptimize(perturbation_coefficients(g, u, Rational(1, 2), 8));
}
BENCHMARK(BM_PerturbationCoefficients);

static void BM_CoreKernelClosedForms(benchmark::State& state) {
  CoreKernelParams p;
  p.k = 7;
  p.delta = Rational(1, 4);
  p.m = 2;
  p.sigma = {Rational(1, 4), Rational(-1, 3)};
  p.tau = {{{3, 1}, {5, -2}}, {{7, Rational(1, 3)}}};
  for (auto _ : state) {
    CoreKernelSpec s = build_core_kernel(p);
    benchmark::DoNotOptimize(core_c_k_plus_1_bound(s));
  }
}
BENCHMARK(BM_CoreKernelClosedForms);

BENCHMARK_MAIN();
