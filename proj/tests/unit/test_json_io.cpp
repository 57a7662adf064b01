#include <gtest/gtest.h>

#include "deckclass/json_io.hpp"

using namespace deckclass;

TEST(JsonIo, Rationals) {
  EXPECT_EQ(rational_json(Rational(-3, 6)), Json("-1/2"));
  EXPECT_EQ(rational_json(Rational(4)), Json("4"));
  EXPECT_EQ(rational_from_json(Json("6/4")), Rational(3, 2));
  EXPECT_EQ(rational_from_json(Json(7)), Rational(7));
  EXPECT_THROW(rational_from_json(Json(0.5)), std::invalid_argument);
}

TEST(JsonIo, CountsRoundTrip) {
  CountVector cv = count_vector(complete_graph(4));
  Json j = counts_json(cv);
  EXPECT_EQ(j["counts"]["C3"], 4);
  EXPECT_EQ(j["counts"]["C4"], 3);
  CountVector back = counts_from_json(j);
  for (const auto& info : catalogue()) EXPECT_EQ(back[info.id], cv[info.id]);
  EXPECT_THROW(counts_from_json(Json::parse(R"({"counts":{"C99":1}})")), std::invalid_argument);
}

TEST(JsonIo, ParamsRoundTrip) {
  CoreKernelParams p;
  p.k = 7;
  p.delta = Rational(1, 8);
  p.m = 1;
  p.sigma = {Rational(1, 16)};
  p.tau = {{{3, 2}, {5, Rational(-1, 3)}}};
  p.gamma = {{7, Rational(5, 2)}};
  Json j = params_json(p);
  CoreKernelParams q = params_from_json(j);
  EXPECT_EQ(q.k, 7);
  EXPECT_EQ(q.delta, p.delta);
  EXPECT_EQ(q.sigma, p.sigma);
  EXPECT_EQ(q.tau, p.tau);
  EXPECT_EQ(q.gamma, p.gamma);
  EXPECT_EQ(params_json(q).dump(), j.dump());
}

TEST(JsonIo, VerdictDumpIsDeterministic) {
  Graph g = glue_at_vertex(cycle_graph(3), 0, cycle_graph(5), 0);
  std::string a = verdict_json(classify_graph(g)).dump(), b = verdict_json(classify_graph(g)).dump();
  EXPECT_EQ(a, b);
  Json j = Json::parse(a);
  EXPECT_EQ(j["status"], "not_locally_common");
  EXPECT_EQ(j["schema"], kSchema);
  EXPECT_EQ(j["table_row"], 9);
  EXPECT_EQ(j["trace"].back()["outcome"], "II");
  EXPECT_EQ(j["trace"][0]["outcome"], "pass-through");
}

TEST(JsonIo, Kernels) {
  StepKernel u({{1, Rational(-1, 2)}, {Rational(-1, 2), 0}});
  StepKernel v = kernel_from_json(kernel_json(u));
  EXPECT_EQ(v.matrix(), u.matrix());
  Json r = Json::parse(R"({"rank_one":[{"lambda":"1/2","mult":2,"breakpoints":["0","1/2","1"],"values":["1","-1"]}]})");
  StepKernel w = kernel_from_json(r);
  ASSERT_EQ(w.n(), 2);
  EXPECT_EQ(w.at(0, 0), 1);
  EXPECT_EQ(w.at(0, 1), -1);
  EXPECT_THROW(kernel_from_json(Json::parse(R"({"grid":{"n":3,"matrix":[["1"]]}})")), std::exception);
  EXPECT_THROW(kernel_from_json(Json::object()), std::invalid_argument);
}

TEST(JsonIo, Polynomial) {
  StepKernel u({{1, -1}, {-1, 1}});
  Json j = poly_json(perturbation_coefficients(cycle_graph(4), u, Rational(1, 2), 4));
  EXPECT_EQ(j["c"]["4"], "1");
  EXPECT_EQ(j["c"]["2"], "0");
  EXPECT_EQ(j["p"], "1/2");
}
