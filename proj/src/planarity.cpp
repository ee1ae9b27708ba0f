#include "spex/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace spex {

bool is_planar(const Graph& g) {
  const int n = g.order();
  if (n <= 4) return true;
  if (n >= 3 && g.size() > 3L * n - 6) return false;

  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(n));
  for (auto [u, v] : g.edges()) boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace spex
