#include <gtest/gtest.h>

#include <map>
#include <random>

#include "deckclass/canonical.hpp"
#include "deckclass/patterns.hpp"
#include "oracles.hpp"

using namespace deckclass;

namespace {

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Graph c3_c5() { return glue_at_vertex(cycle_graph(3), 0, cycle_graph(5), 0); }

}  // namespace

TEST(Patterns, CatalogueNamesRoundTrip) {
  for (const auto& info : catalogue()) {
    EXPECT_EQ(pattern_from_name(info.name), info.id);
    EXPECT_EQ(pattern_info(info.id).graph.size(), info.graph.size());
  }
  EXPECT_FALSE(pattern_from_name("C13").has_value());
  EXPECT_EQ(pattern_name(PatternId::C3_P2_C5), "C3⊕P2⊕C5");
}

TEST(Patterns, CatalogueShapes) {
  EXPECT_TRUE(are_isomorphic(pattern_info(PatternId::C3_O_C5).graph, c3_c5()));
  EXPECT_TRUE(are_isomorphic(pattern_info(PatternId::C3_P2_C3).graph,
                             join_by_path(cycle_graph(3), 0, 2, cycle_graph(3), 0)));
  EXPECT_TRUE(are_isomorphic(pattern_info(PatternId::C3_U_C3_U_C3_U_C3).graph,
                             disjoint_union(disjoint_union(cycle_graph(3), cycle_graph(3)),
                                            disjoint_union(cycle_graph(3), cycle_graph(3)))));
  EXPECT_TRUE(pattern_info(PatternId::C9).auxiliary);
  EXPECT_FALSE(pattern_info(PatternId::C10).auxiliary);
}

TEST(Patterns, CountVectorOfDumbbellHost) {
  CountVector cv = count_vector(c3_c5());
  EXPECT_EQ(cv[PatternId::C3_O_C5], 1u);
  EXPECT_EQ(cv[PatternId::C3], 1u);
  EXPECT_EQ(cv[PatternId::C5], 1u);
  EXPECT_EQ(cv[PatternId::C8], 0u);
  EXPECT_EQ(cv[PatternId::C3_U_C5], 0u);
  EXPECT_EQ(cv[PatternId::P1], 8u);
  EXPECT_EQ(cv[PatternId::P2], 12u);
  EXPECT_EQ(cv[PatternId::P1_U_P1], 16u);
  EXPECT_EQ(cv.edge_count, 8u);
}

TEST(Patterns, CountVectorOfK4) {
  CountVector cv = count_vector(complete_graph(4));
  EXPECT_EQ(cv[PatternId::C3], 4u);
  EXPECT_EQ(cv[PatternId::C4], 3u);
  EXPECT_EQ(cv[PatternId::P2], 12u);
  EXPECT_EQ(cv[PatternId::P1_U_P1], 3u);
}

TEST(Patterns, CountSubgraphsMatchesEdgeSubsetEnumeration) {
  std::mt19937_64 rng(23);
  std::vector<Graph> patterns;
  for (const auto& info : catalogue())
    if (info.graph.size() <= 10) patterns.push_back(info.graph);
  for (int e = 1; e <= 5; ++e)
    for (const auto& g : oracle::all_graphs_up_to(e))
      if (g.size() == static_cast<std::size_t>(e)) patterns.push_back(g);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + trial % 6;
    Graph host = oracle::random_graph(rng, n, 0.3 + 0.03 * (trial % 5));
    if (host.size() > 13) continue;
    auto ref = oracle::count_copies_all(host, patterns);
    for (std::size_t i = 0; i < patterns.size(); ++i)
      ASSERT_EQ(count_subgraphs(host, patterns[i]), ref[i]) << to_graph6(host) << " / " << to_graph6(patterns[i]);
  }
}

TEST(Patterns, MonomorphismsAreAutomorphismsTimesCopies) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    Graph host = oracle::random_graph(rng, 7, 0.45);
    for (int len = 3; len <= 6; ++len) {
      Graph c = cycle_graph(len);
      EXPECT_EQ(count_monomorphisms(c, host), automorphism_count(c) * count_subgraphs(host, c));
    }
  }
  EXPECT_EQ(automorphism_count(cycle_graph(5)), 10u);
  EXPECT_EQ(automorphism_count(complete_graph(4)), 24u);
  EXPECT_EQ(automorphism_count(petersen_graph()), 120u);
}

TEST(Patterns, DeckScalingIdentity) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = without_isolated(oracle::random_graph(rng, 6, 0.4));
    int m = static_cast<int>(g.size());
    if (m < 2 || m > 8) continue;
    for (int l = 1; l <= m; ++l)
      for (int lp = 1; lp <= l; ++lp) {
        // Classes of l'-edge subgraphs of g, each with its tally in the
        // l'-deck of the l-deck.
        std::vector<std::pair<Graph, std::uint64_t>> tally;
        for (const auto& h : oracle::deck(g, lp)) {
          bool seen = false;
          for (auto& [c, n] : tally) seen = seen || oracle::isomorphic(c, h);
          if (!seen) tally.push_back({h, 0});
        }
        for (const auto& card : oracle::deck(g, l))
          for (const auto& sub : oracle::deck(card, lp))
            for (auto& [c, n] : tally)
              if (oracle::isomorphic(c, sub)) {
                ++n;
                break;
              }
        for (const auto& [h, n] : tally)
          ASSERT_EQ(n, binom(m - lp, l - lp) * count_subgraphs(g, h)) << to_graph6(g) << " " << l << " " << lp;
      }
  }
}

TEST(Patterns, IsPrincipal) {
  for (int k = 3; k <= 12; ++k) EXPECT_TRUE(is_principal(cycle_graph(k))) << k;
  EXPECT_TRUE(is_principal(c3_c5()));
  EXPECT_TRUE(is_principal(disjoint_union(cycle_graph(3), cycle_graph(7))));
  EXPECT_TRUE(is_principal(join_by_path(cycle_graph(3), 0, 4, cycle_graph(5), 0)));
  EXPECT_FALSE(is_principal(complete_graph(4)));
  EXPECT_FALSE(is_principal(path_graph(3)));
  EXPECT_FALSE(is_principal(glue_at_vertex(cycle_graph(4), 0, cycle_graph(3), 0)));
  EXPECT_FALSE(is_principal(disjoint_union(cycle_graph(4), cycle_graph(4))));
  EXPECT_FALSE(is_principal(glue_at_vertex(cycle_graph(3), 0, path_graph(1), 0)));
}

TEST(Patterns, EnumeratePrincipal) {
  const std::map<int, std::size_t> expected_sizes = {{6, 3}, {8, 4}, {10, 10}};
  for (int l = 3; l <= 12; ++l) {
    auto all = enumerate_principal(l);
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_TRUE(is_principal(all[i]));
      EXPECT_EQ(all[i].size(), static_cast<std::size_t>(l));
      for (std::size_t j = 0; j < i; ++j) ASSERT_FALSE(oracle::isomorphic(all[i], all[j])) << l;
    }
    for (const auto& info : catalogue()) {
      if (info.graph.size() != static_cast<std::size_t>(l) || !is_principal(info.graph)) continue;
      bool found = false;
      for (const auto& h : all) found = found || oracle::isomorphic(h, info.graph);
      EXPECT_TRUE(found) << info.name;
    }
    auto it = expected_sizes.find(l);
    if (it != expected_sizes.end()) EXPECT_EQ(all.size(), it->second) << l;
  }
}

TEST(Patterns, ShortestEvenCycle) {
  EXPECT_EQ(shortest_even_cycle(complete_graph(4)), 4);
  EXPECT_EQ(shortest_even_cycle(petersen_graph()), 6);
  EXPECT_EQ(shortest_even_cycle(c3_c5()), std::nullopt);
  EXPECT_EQ(shortest_even_cycle(cycle_graph(10)), 10);
  // Two triangles sharing an edge contain a 4-cycle.
  EXPECT_EQ(shortest_even_cycle(Graph(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 2}})), 4);
}

TEST(Patterns, SubgraphClassesPartitionEdgeSubsets) {
  Graph g = petersen_graph();
  for (int l = 1; l <= 6; ++l) {
    std::uint64_t total = 0;
    for (const auto& [h, n] : all_subgraph_classes(g, l)) {
      total += n;
      EXPECT_EQ(n, count_subgraphs(g, h));
    }
    EXPECT_EQ(total, binom(15, l));
  }
  for (const auto& [h, n] : min_degree_two_subgraphs(g, 6)) {
    EXPECT_GE(h.min_degree(), 2);
    EXPECT_EQ(n, 10u);  // the 6-cycles
  }
}
