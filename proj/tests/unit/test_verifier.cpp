#include <gtest/gtest.h>

#include "deckclass/verifier.hpp"

using namespace deckclass;

namespace {

Graph glued(int a, int b) { return glue_at_vertex(cycle_graph(a), 0, cycle_graph(b), 0); }

void expect_certified(const WitnessReport& r) {
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << r.rule << ": " << c.name;
  EXPECT_TRUE(r.certified());
}

}  // namespace

TEST(VerifyClassTwo, GluedTriangleAndPentagon) {
  WitnessReport r = verify_class2(glued(3, 5));
  expect_certified(r);
  EXPECT_EQ(r.rule, "deck8.row9");
  EXPECT_EQ(r.coefficients.at(2), 0);
  EXPECT_EQ(r.coefficients.at(4), 0);
  EXPECT_EQ(r.coefficients.at(6), 0);
  EXPECT_LE(r.coefficients.at(8), Rational(-1, 2));
}

TEST(VerifyClassTwo, DisjointTriangleAndPentagon) {
  WitnessReport r = verify_class2(disjoint_union(cycle_graph(3), cycle_graph(5)));
  expect_certified(r);
  EXPECT_EQ(r.rule, "deck8.row11");
  EXPECT_LT(r.coefficients.at(8), 0);
}

TEST(VerifyClassTwo, IndefiniteTenEdgeForm) {
  // A triangle bridged to a pentagon, next to a lone triangle.
  Graph g = disjoint_union(join_by_path(cycle_graph(3), 0, 2, cycle_graph(5), 0), cycle_graph(3));
  WitnessReport r = verify_class2(g);
  expect_certified(r);
  EXPECT_EQ(r.rule, "deck10.indefinite-form");
  EXPECT_LT(r.coefficients.at(10), 0);
}

TEST(VerifyClassTwo, TwelveEdgeHosts) {
  for (const Graph& g : {glued(3, 9), glued(5, 7), disjoint_union(cycle_graph(5), cycle_graph(7)),
                         join_by_path(cycle_graph(3), 0, 2, cycle_graph(7), 0)}) {
    WitnessReport r = verify_class2(g);
    expect_certified(r);
    EXPECT_LT(r.coefficients.rbegin()->second, 0);
  }
}

TEST(VerifyClassTwo, RejectsOtherVerdicts) {
  EXPECT_THROW(verify_class2(cycle_graph(4)), std::invalid_argument);
  EXPECT_THROW(verify_class3_null(cycle_graph(4)), std::invalid_argument);
}

TEST(VerifyClassThree, NullWitnesses) {
  WitnessReport bowtie = verify_class3_null(glued(3, 3));
  expect_certified(bowtie);
  EXPECT_EQ(bowtie.coefficients.size(), 3u);
  expect_certified(verify_class3_null(join_by_path(cycle_graph(3), 0, 2, cycle_graph(3), 0)));
  WitnessReport odd = verify_class3_null(cycle_graph(13));
  expect_certified(odd);
  EXPECT_EQ(odd.coefficients.rbegin()->first, 12);
}

TEST(VerifyCounts, AgreesWithTheGraphPath) {
  for (const Graph& g : {glued(3, 5), disjoint_union(cycle_graph(3), cycle_graph(5)), glued(3, 9)}) {
    CountVector cv = count_vector(g);
    GraphVerdict v = classify_graph(g);
    WitnessReport a = verify_class2(g), b = verify_class2_counts(cv, v.trace);
    expect_certified(b);
    EXPECT_EQ(a.coefficients, b.coefficients);
  }
  Graph bowtie = glued(3, 3);
  expect_certified(verify_class3_null_counts(count_vector(bowtie), 6));
}

TEST(VerifyCore, RandomSmallSpecsAndTaylor) {
  CoreKernelParams p;
  p.k = 3;
  p.delta = 1;
  p.gamma = {{3, Rational(1, 4)}};
  expect_certified(verify_core_identities(build_core_kernel(p)));
  StepKernel u({{1, -1}, {-1, 1}});
  expect_certified(verify_taylor(cycle_graph(4), u, 5));
}
