#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

/// Disjoint union of paths, stored as its multiset of path orders.
///
/// Parts are kept non-increasing. An isolated vertex is a path of order 1.
/// A forest with t parts on `total` vertices has total - t edges, so with
/// total = n - 2 it belongs to the family L(n, a) exactly when t = a + 1.
class LinearForest {
 public:
  /// Throws argument_error on an empty list or a part below 1.
  explicit LinearForest(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int total() const noexcept { return total_; }
  int part_count() const noexcept { return static_cast<int>(parts_.size()); }
  long size() const noexcept { return total_ - part_count(); }
  int deficiency() const noexcept { return part_count() - 1; }
  /// n1 + n2, the two longest orders (n2 = 0 for a single path).
  int longest_pair() const noexcept { return parts_[0] + (parts_.size() > 1 ? parts_[1] : 0); }

  std::string to_string() const;  // "[4,1,1]"

  friend bool operator==(const LinearForest&, const LinearForest&) = default;
  friend auto operator<=>(const LinearForest&, const LinearForest&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Vertex layout of every join built here: the two join vertices are 0 and 1,
/// then the paths follow in part order with consecutive labels along each path.
inline constexpr Vertex kHubA = 0;
inline constexpr Vertex kHubB = 1;
inline constexpr Vertex kForestOffset = 2;

/// First label of each path block inside a join (offset already applied).
std::vector<Vertex> join_block_starts(const LinearForest& forest);

Graph build_linear_forest(const LinearForest& forest);
Graph build_linear_forest(const std::vector<int>& parts);

/// K2 v L with the layout above. With `dominating_edge` false the two join
/// vertices are not adjacent, which yields K_{2,n-2} for an edgeless forest.
Graph k2_join(const LinearForest& forest, bool dominating_edge = true);

/// K2 v (P_{n-2k-4} u 2P_{k+1}); requires k >= 0 and n >= 3k + 7.
LinearForest extremal_forest(int n, int k);
Graph extremal_graph(int n, int k);

/// Streams L(n, a): partitions of n - 2 into exactly a + 1 parts, in
/// reverse-lexicographic order of the non-increasing part lists.
class LnaEnumerator {
 public:
  /// Throws argument_error when n < a + 3.
  LnaEnumerator(int n, int a);
  std::optional<LinearForest> next();

 private:
  int total_;
  int parts_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<LinearForest> enumerate_lna(int n, int a);

/// All partitions of `total` into between 1 and `max_parts` parts, grouped by
/// part count ascending, each group reverse-lexicographic.
std::vector<LinearForest> partitions_up_to(int total, int max_parts);

}  // namespace spex
