#include "spex/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "spex/error.hpp"

namespace spex {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw construction_error("negative vertex count " + std::to_string(n));
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw construction_error("invalid edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") for order " + std::to_string(n));
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Graph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<std::int32_t>(list.size());
  }
  g.targets_.reserve(static_cast<std::size_t>(g.offsets_[n]));
  for (const auto& list : adj) g.targets_.insert(g.targets_.end(), list.begin(), list.end());
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<int> seen(static_cast<std::size_t>(n_), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> relabel(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) relabel[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : neighbors(vertices[i]))
      if (relabel[w] > static_cast<Vertex>(i)) es.emplace_back(static_cast<Vertex>(i), relabel[w]);
  return from_edges(static_cast<int>(vertices.size()), es);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  auto es = g1.edges();
  const Vertex off = g1.order();
  for (auto [u, v] : g2.edges()) es.emplace_back(u + off, v + off);
  return Graph::from_edges(g1.order() + g2.order(), es);
}

Graph join(const Graph& g1, const Graph& g2) {
  auto es = g1.edges();
  const Vertex off = g1.order();
  for (auto [u, v] : g2.edges()) es.emplace_back(u + off, v + off);
  for (Vertex u = 0; u < g1.order(); ++u)
    for (Vertex v = 0; v < g2.order(); ++v) es.emplace_back(u, v + off);
  return Graph::from_edges(g1.order() + g2.order(), es);
}

Graph empty_graph(int n) { return Graph::from_edges(n, std::span<const Edge>{}); }

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw argument_error("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

Graph with_edge(const Graph& g, Vertex u, Vertex v) {
  if (g.has_edge(u, v)) throw argument_error("edge already present");
  auto es = g.edges();
  es.emplace_back(u, v);
  return Graph::from_edges(g.order(), es);
}

PlanarBoundsReport planar_bounds_check(const Graph& g, const VertexSubsetPair& p) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), 0);
  auto mark = [&](const std::vector<Vertex>& set, int tag) {
    for (Vertex v : set) {
      if (v < 0 || v >= g.order()) throw argument_error("vertex " + std::to_string(v) + " out of range");
      if (side[v] != 0) throw argument_error("X and Y are not disjoint (vertex " + std::to_string(v) + ")");
      side[v] = tag;
    }
  };
  mark(p.x, 1);
  mark(p.y, 2);

  PlanarBoundsReport r;
  for (auto [u, v] : g.edges()) {
    if (side[u] == 1 && side[v] == 1) ++r.edges_inside_x;
    if ((side[u] == 1 && side[v] == 2) || (side[u] == 2 && side[v] == 1)) ++r.edges_between;
  }
  const long nx = static_cast<long>(p.x.size());
  const long ny = static_cast<long>(p.y.size());
  r.bound_inside_x = 3 * nx - 6;
  r.bound_between = 2 * (nx + ny) - 4;
  r.inside_applies = nx >= 3;
  // A single X-Y edge already exceeds 2*2-4, so the bipartite bound needs three vertices.
  r.between_applies = nx + ny >= 3;
  r.holds = (!r.inside_applies || r.edges_inside_x <= r.bound_inside_x) &&
            (!r.between_applies || r.edges_between <= r.bound_between);
  return r;
}

}  // namespace spex
