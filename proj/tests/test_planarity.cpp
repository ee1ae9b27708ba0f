#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles/kuratowski.hpp"
#include "oracles/random_graphs.hpp"
#include "spex/constructions.hpp"
#include "spex/graph.hpp"
#include "spex/planarity.hpp"

using namespace spex;

TEST_CASE("planarity of named graphs") {
  CHECK(is_planar(complete_graph(4)));
  CHECK_FALSE(is_planar(complete_graph(5)));
  CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
  CHECK(is_planar(complete_bipartite(2, 50)));
  CHECK(is_planar(k2_join(LinearForest({18}), true)));  // K2 v P18, n = 20
  CHECK(is_planar(extremal_graph(259, 0)));

  // Petersen graph: non-planar with only 15 edges, so the edge count alone is no help.
  const Graph petersen = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                                {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  CHECK_FALSE(is_planar(petersen));
  CHECK_FALSE(oracle::brute_force_planar(petersen));
}

TEST_CASE("the subdivision oracle recognises the Kuratowski graphs and their subdivisions") {
  CHECK_FALSE(oracle::brute_force_planar(complete_graph(5)));
  CHECK_FALSE(oracle::brute_force_planar(complete_bipartite(3, 3)));
  CHECK(oracle::brute_force_planar(complete_graph(4)));
  // K3,3 with one edge subdivided twice.
  auto es = complete_bipartite(3, 3).edges();
  es.erase(std::find(es.begin(), es.end(), Edge{0, 3}));
  es.insert(es.end(), {{0, 6}, {6, 7}, {7, 3}});
  CHECK_FALSE(oracle::brute_force_planar(Graph::from_edges(8, es)));
}

TEST_CASE("is_planar agrees with the subdivision oracle on every graph with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<Edge> es;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) es.push_back(slots[i]);
      const Graph g = Graph::from_edges(n, es);
      REQUIRE(is_planar(g) == oracle::brute_force_planar(g));
    }
  }
}

TEST_CASE("is_planar agrees with the subdivision oracle on random graphs, 7 <= n <= 9") {
  std::mt19937_64 rng(99);
  int planar = 0;
  int nonplanar = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 7 + trial % 3;
    const double p = std::uniform_real_distribution<double>(0.2, 0.7)(rng);
    const Graph g = oracle::random_graph(n, p, rng);
    const bool expected = oracle::brute_force_planar(g);
    REQUIRE(is_planar(g) == expected);
    (expected ? planar : nonplanar)++;
  }
  CHECK(planar > 100);
  CHECK(nonplanar > 100);
}
