#include <gtest/gtest.h>

#include "deckclass/core_kernel.hpp"
#include "deckclass/verifier.hpp"

using namespace deckclass;

namespace {

CoreKernelParams small_params() {
  CoreKernelParams p;
  p.k = 3;
  p.delta = 1;
  p.m = 1;
  p.sigma = {Rational(1, 2)};
  p.tau = {{{3, Rational(1, 2)}}};
  p.gamma = {{3, Rational(-1, 4)}};
  return p;
}

}  // namespace

TEST(CoreKernel, Layout) {
  CoreKernelSpec s = build_core_kernel(small_params());
  EXPECT_FALSE(s.fallback());
  EXPECT_EQ(s.intervals(), 2);
  EXPECT_EQ(s.root(), 2);
  EXPECT_EQ(s.gamma(), Rational(1, 2));
  EXPECT_EQ(s.halves(), 4);
  // Each half's third power sum hits its target exactly.
  EXPECT_EQ(power_sum(s.omega(0), 3), s.gamma() * Rational(1, 2) / 2 - Rational(1, 16));
  EXPECT_EQ(power_sum(s.omega(1), 3), -s.gamma() * Rational(1, 2) / 2 - Rational(1, 16));
  EXPECT_EQ(power_sum(s.omega(2), 3), Rational(-1, 8));
}

TEST(CoreKernel, Validation) {
  auto p = small_params();
  p.k = 4;
  EXPECT_THROW(build_core_kernel(p), std::invalid_argument);
  p = small_params();
  p.sigma = {1};
  EXPECT_THROW(build_core_kernel(p), std::invalid_argument);  // sigma^4 > delta/2
  p = small_params();
  p.gamma[5] = 1;
  EXPECT_THROW(build_core_kernel(p), std::invalid_argument);
  p = small_params();
  p.delta = 0;
  EXPECT_THROW(build_core_kernel(p), std::invalid_argument);
}

TEST(CoreKernel, AllZeroParametersFallBack) {
  CoreKernelParams p;
  p.k = 7;
  p.delta = 1;
  CoreKernelSpec s = build_core_kernel(p);
  EXPECT_TRUE(s.fallback());
  EXPECT_EQ(s.params().k, 9);
  EXPECT_EQ(s.params().gamma_of(9), Rational(1, 2));
  CoreEvaluator ev(s);
  EXPECT_GT(*ev.density(cycle_graph(4)), 0);
  for (int l = 3; l <= 7; l += 2) EXPECT_EQ(*ev.density(cycle_graph(l)), 0);
  EXPECT_TRUE(ev.rooted_cycle(5).is_zero());
}

TEST(CoreKernel, ClosedFormsAgreeWithTheEvaluator) {
  CoreKernelParams p;
  p.k = 7;
  p.delta = Rational(1, 4);
  p.m = 2;
  p.sigma = {Rational(1, 4), Rational(-1, 3)};
  p.tau = {{{3, 1}, {5, -2}}, {{7, Rational(1, 3)}}};
  p.gamma = {{5, Rational(2, 7)}};
  CoreKernelSpec s = build_core_kernel(p);
  CoreEvaluator ev(s);
  for (int l = 3; l <= 7; l += 2) {
    EXPECT_EQ(*ev.density(cycle_graph(l)), core_cycle_density(s, l));
    EXPECT_EQ(*ev.density(glue_at_vertex(cycle_graph(l), 0, cycle_graph(l), 0)), core_self_glue_density(s, l));
    auto a = ev.rooted_cycle(l), b = core_rooted_cycle_closed_form(s, l);
    EXPECT_TRUE((a + b.scaled(-1)).is_zero()) << l;
    for (int l2 = 3; l2 <= 7; l2 += 2)
      for (int n = 0; n <= 3; ++n) {
        if (l == l2 && n == 0) continue;
        EXPECT_EQ(*ev.density(join_by_path(cycle_graph(l), 0, n, cycle_graph(l2), 0)), core_theta_density(s, l, n, l2));
      }
  }
  EXPECT_EQ(*ev.density(cycle_graph(8)), core_c_k_plus_1_bound(s));
  EXPECT_LE(core_c_k_plus_1_bound(s), p.delta);
  EXPECT_EQ(*ev.density(path_graph(2)), 0);
  EXPECT_FALSE(ev.density(complete_graph(4)).has_value());
}

TEST(CoreKernel, GluedDumbbellDensity) {
  CoreKernelParams p;
  p.k = 7;
  p.delta = Rational(1, 4);
  p.m = 1;
  p.sigma = {0};
  p.tau = {{{3, 1}, {5, -1}}};
  CoreKernelSpec s = build_core_kernel(p);
  CoreEvaluator ev(s);
  EXPECT_EQ(core_theta_density(s, 3, 0, 5), -1);
  EXPECT_EQ(*ev.density(glue_at_vertex(cycle_graph(3), 0, cycle_graph(5), 0)), -1);
  EXPECT_EQ(*ev.density(disjoint_union(cycle_graph(3), cycle_graph(5))), 0);
}

TEST(CoreKernel, NoEigenfunctionsMeansNoThetaDensity) {
  CoreKernelParams p;
  p.k = 5;
  p.delta = 1;
  p.gamma = {{3, Rational(1, 4)}};
  CoreKernelSpec s = build_core_kernel(p);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(core_theta_density(s, 3, n, 5), 0);
}

TEST(CoreKernel, MaterializedGridMatches) {
  CoreKernelSpec s = build_core_kernel(small_params());
  StepKernel u = materialize(s);
  EXPECT_TRUE(is_balanced(u));
  EXPECT_EQ(cycle_density(3, u), Rational(-1, 4));
  WitnessReport r = verify_core_identities(s);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name;
  EXPECT_TRUE(r.certified());
}

TEST(CoreKernel, MaterializationBudget) {
  CoreKernelParams p;
  p.k = 11;
  p.delta = Rational(1, 1000);
  p.gamma = {{3, 1}, {11, -1}};
  CoreKernelSpec s = build_core_kernel(p);
  EXPECT_GT(materialized_cells(s), 512);
  EXPECT_THROW(materialize(s), MaterializationRefused);
}
