#include "spex/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "spex/error.hpp"
#include "spex/planarity.hpp"

namespace spex {

LinearForest::LinearForest(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw argument_error("linear forest needs at least one path");
  for (int p : parts_)
    if (p < 1) throw argument_error("path order must be at least 1, got " + std::to_string(p));
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string LinearForest::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::vector<Vertex> join_block_starts(const LinearForest& forest) {
  std::vector<Vertex> starts;
  Vertex at = kForestOffset;
  for (int p : forest.parts()) {
    starts.push_back(at);
    at += p;
  }
  return starts;
}

namespace {

void append_forest_edges(const LinearForest& forest, Vertex offset, std::vector<Edge>& out) {
  Vertex at = offset;
  for (int p : forest.parts()) {
    for (int i = 0; i + 1 < p; ++i) out.emplace_back(at + i, at + i + 1);
    at += p;
  }
}

}  // namespace

Graph build_linear_forest(const LinearForest& forest) {
  std::vector<Edge> es;
  append_forest_edges(forest, 0, es);
  return Graph::from_edges(forest.total(), es);
}

Graph build_linear_forest(const std::vector<int>& parts) { return build_linear_forest(LinearForest(parts)); }

Graph k2_join(const LinearForest& forest, bool dominating_edge) {
  const int n = forest.total() + 2;
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(3 * n));
  if (dominating_edge) es.emplace_back(kHubA, kHubB);
  append_forest_edges(forest, kForestOffset, es);
  for (Vertex v = kForestOffset; v < n; ++v) {
    es.emplace_back(kHubA, v);
    es.emplace_back(kHubB, v);
  }
  Graph g = Graph::from_edges(n, es);
  if (n <= 200 && !is_planar(g)) throw std::logic_error("K2 join came out non-planar");
  return g;
}

LinearForest extremal_forest(int n, int k) {
  if (k < 0) throw argument_error("k must be non-negative");
  if (n < 3 * k + 7) {
    throw argument_error("extremal graph needs n >= 3k+7 (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                         ")");
  }
  return LinearForest({n - 2 * k - 4, k + 1, k + 1});
}

Graph extremal_graph(int n, int k) { return k2_join(extremal_forest(n, k), true); }

LnaEnumerator::LnaEnumerator(int n, int a) : total_(n - 2), parts_(a + 1) {
  if (a < 0) throw argument_error("deficiency a must be non-negative");
  if (n < a + 3) {
    throw argument_error("L(n,a) needs n >= a+3 (n=" + std::to_string(n) + ", a=" + std::to_string(a) + ")");
  }
}

std::optional<LinearForest> LnaEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    current_.assign(static_cast<std::size_t>(parts_), 1);
    current_[0] = total_ - (parts_ - 1);
    return LinearForest(current_);
  }
  // Find the rightmost part that can shrink by one while the tail still fits
  // under it, then refill the tail as lexicographically large as possible.
  int suffix = current_.back();
  for (int i = parts_ - 2; i >= 0; --i) {
    suffix += current_[i];
    const int lowered = current_[i] - 1;
    const int slots = parts_ - i;
    if (lowered >= 1 && static_cast<long>(lowered) * slots >= suffix) {
      current_[i] = lowered;
      int rest = suffix - lowered;
      for (int j = i + 1; j < parts_; ++j) {
        current_[j] = std::min(lowered, rest - (parts_ - 1 - j));
        rest -= current_[j];
      }
      return LinearForest(current_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<LinearForest> enumerate_lna(int n, int a) {
  std::vector<LinearForest> out;
  LnaEnumerator e(n, a);
  while (auto f = e.next()) out.push_back(std::move(*f));
  return out;
}

std::vector<LinearForest> partitions_up_to(int total, int max_parts) {
  std::vector<LinearForest> out;
  for (int t = 1; t <= std::min(max_parts, total); ++t) {
    auto group = enumerate_lna(total + 2, t - 1);
    out.insert(out.end(), std::make_move_iterator(group.begin()), std::make_move_iterator(group.end()));
  }
  return out;
}

}  // namespace spex
