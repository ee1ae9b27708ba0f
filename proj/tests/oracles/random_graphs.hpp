#pragma once

#include <random>
#include <vector>

#include "spex/graph.hpp"

namespace oracle {

inline spex::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<spex::Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return spex::Graph::from_edges(n, es);
}

// Random spanning tree plus independent extra edges.
inline spex::Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<spex::Edge> es;
  for (int v = 1; v < n; ++v) es.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return spex::Graph::from_edges(n, es);
}

// Keeps each edge of g independently with probability p.
inline spex::Graph random_subgraph(const spex::Graph& g, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<spex::Edge> es;
  for (auto e : g.edges())
    if (coin(rng)) es.push_back(e);
  return spex::Graph::from_edges(g.order(), es);
}

}  // namespace oracle
