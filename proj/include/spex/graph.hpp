#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spex {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed sparse row form with every neighbour
/// list sorted ascending. Values are immutable once built, so they can be
/// shared freely between worker threads.
class Graph {
 public:
  Graph() = default;

  /// Builds the symmetric closure of `edges`, dropping duplicates.
  /// Throws construction_error on out-of-range endpoints or self-loops.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }
  long size() const noexcept { return static_cast<long>(targets_.size() / 2); }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// Edge list with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_connected() const;
  /// Vertex sets of the connected components, each sorted, ordered by
  /// smallest member.
  std::vector<std::vector<Vertex>> components() const;
  /// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
  Graph induced(std::span<const Vertex> vertices) const;

  std::span<const std::int32_t> csr_offsets() const noexcept { return offsets_; }
  std::span<const Vertex> csr_targets() const noexcept { return targets_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::int32_t> offsets_{0};
  std::vector<Vertex> targets_;
};

/// Disjoint union; g2's vertices are shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& g1, const Graph& g2);

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

/// A graph with one extra edge; throws if the edge already exists.
Graph with_edge(const Graph& g, Vertex u, Vertex v);

struct VertexSubsetPair {
  std::vector<Vertex> x;
  std::vector<Vertex> y;
};

/// Edge counts inside X and across X,Y, against the planar bounds
/// e(X) <= 3|X|-6 and e(X,Y) <= 2(|X|+|Y|)-4.
struct PlanarBoundsReport {
  long edges_inside_x = 0;
  long bound_inside_x = 0;
  long edges_between = 0;
  long bound_between = 0;
  bool inside_applies = false;   // |X| >= 3
  bool between_applies = false;  // |X|+|Y| >= 3
  bool holds = true;
};

/// Throws argument_error when X and Y intersect or hold out-of-range labels.
PlanarBoundsReport planar_bounds_check(const Graph& g, const VertexSubsetPair& p);

}  // namespace spex
