#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "deckclass/canonical.hpp"
#include "oracles.hpp"

using namespace deckclass;

namespace {

Graph relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph h(g.order());
  auto edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  for (auto [u, v] : edges) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(rng, 3 + trial % 9, 0.35);
    Graph h = relabel(g, rng);
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_TRUE(are_isomorphic(g, h));
    EXPECT_TRUE(oracle::isomorphic(canonical_graph(g), g));
  }
}

TEST(Canonical, AgreesWithBruteForceOnRandomPairs) {
  std::mt19937_64 rng(17);
  int positives = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    int n = 4 + trial % 4;
    Graph a = oracle::random_graph(rng, n, 0.5), b = oracle::random_graph(rng, n, 0.5);
    if (a.size() != b.size()) continue;
    bool ref = oracle::isomorphic(a, b);
    positives += ref;
    ASSERT_EQ(are_isomorphic(a, b), ref) << to_graph6(a) << " " << to_graph6(b);
  }
  EXPECT_GT(positives, 10);
}

TEST(Canonical, DistinguishesRegularLookalikes) {
  // Two 3-regular graphs on 6 vertices: prism and K_{3,3}.
  Graph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_FALSE(are_isomorphic(prism, k33));
  EXPECT_FALSE(are_isomorphic(disjoint_union(cycle_graph(3), cycle_graph(3)), cycle_graph(6)));
  EXPECT_TRUE(are_isomorphic(disjoint_union(cycle_graph(3), cycle_graph(5)),
                             disjoint_union(cycle_graph(5), cycle_graph(3))));
}
