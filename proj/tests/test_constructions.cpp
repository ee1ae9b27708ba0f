#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "spex/constructions.hpp"
#include "spex/error.hpp"
#include "spex/planarity.hpp"

using namespace spex;

namespace {

// Partitions of `total` into exactly `parts` parts by plain recursion over
// the largest part, counted independently of the enumerator.
long count_partitions(int total, int parts, int cap) {
  if (parts == 0) return total == 0 ? 1 : 0;
  long c = 0;
  for (int first = std::min(cap, total - parts + 1); first >= 1; --first)
    c += count_partitions(total - first, parts - 1, first);
  return c;
}

// Every multiset of `parts` positive integers summing to `total`, by brute force over compositions.
std::set<std::vector<int>> brute_partitions(int total, int parts) {
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(cur.size()) == parts) {
      if (left == 0) {
        auto s = cur;
        std::sort(s.rbegin(), s.rend());
        out.insert(s);
      }
      return;
    }
    for (int v = 1; v <= left; ++v) {
      cur.push_back(v);
      rec(left - v);
      cur.pop_back();
    }
  };
  rec(total);
  return out;
}

}  // namespace

TEST_CASE("linear forest basics") {
  LinearForest f({1, 4, 1});
  CHECK(f.parts() == std::vector<int>{4, 1, 1});
  CHECK(f.total() == 6);
  CHECK(f.part_count() == 3);
  CHECK(f.size() == 3);
  CHECK(f.deficiency() == 2);
  CHECK(f.longest_pair() == 5);
  CHECK(f.to_string() == "[4,1,1]");
  CHECK(LinearForest({7}).longest_pair() == 7);
  CHECK_THROWS_AS(LinearForest({}), argument_error);
  CHECK_THROWS_AS(LinearForest({3, 0}), argument_error);

  const Graph g = build_linear_forest(f);
  CHECK(g.order() == 6);
  CHECK(g.size() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 3));
  CHECK_FALSE(g.has_edge(3, 4));
}

TEST_CASE("k2_join layout and edge counts") {
  LinearForest f({3, 2});
  const Graph g = k2_join(f, true);
  CHECK(g.order() == 7);
  CHECK(g.size() == 1 + 2 * 5 + 3);
  CHECK(g.has_edge(kHubA, kHubB));
  for (Vertex v = 2; v < 7; ++v) {
    CHECK(g.has_edge(kHubA, v));
    CHECK(g.has_edge(kHubB, v));
  }
  CHECK(g.has_edge(2, 3));
  CHECK(g.has_edge(3, 4));
  CHECK_FALSE(g.has_edge(4, 5));
  CHECK(g.has_edge(5, 6));
  CHECK(join_block_starts(f) == std::vector<Vertex>{2, 5});

  const Graph h = k2_join(f, false);
  CHECK(h.size() == g.size() - 1);
  CHECK_FALSE(h.has_edge(kHubA, kHubB));

  // Edgeless forest without the hub edge is K_{2,n-2}.
  CHECK(k2_join(LinearForest(std::vector<int>(8, 1)), false) == complete_bipartite(2, 8));
}

TEST_CASE("extremal construction") {
  CHECK(extremal_forest(259, 0).parts() == std::vector<int>{255, 1, 1});
  CHECK(extremal_forest(20, 2).parts() == std::vector<int>{12, 3, 3});
  CHECK(extremal_forest(7, 0).parts() == std::vector<int>{3, 1, 1});
  CHECK_THROWS_AS(extremal_forest(6, 0), argument_error);
  CHECK_THROWS_AS(extremal_forest(12, 2), argument_error);
  CHECK_THROWS_AS(extremal_forest(30, -1), argument_error);
  for (int k = 0; k <= 4; ++k)
    for (int n = 3 * k + 7; n <= 3 * k + 30; ++n) {
      const Graph g = extremal_graph(n, k);
      CHECK(g.order() == n);
      // 2(n-2) + 1 + (n-2) - 3 edges: three paths in the forest.
      CHECK(g.size() == 3 * n - 8);
      CHECK(is_planar(g));
    }
}

TEST_CASE("L(n,a) enumeration examples") {
  const auto l61 = enumerate_lna(6, 1);
  REQUIRE(l61.size() == 2);
  CHECK(l61[0].parts() == std::vector<int>{3, 1});
  CHECK(l61[1].parts() == std::vector<int>{2, 2});

  const auto l82 = enumerate_lna(8, 2);
  std::vector<std::vector<int>> got;
  for (const auto& f : l82) got.push_back(f.parts());
  CHECK(got == std::vector<std::vector<int>>{{4, 1, 1}, {3, 2, 1}, {2, 2, 2}});

  CHECK(enumerate_lna(5, 0).size() == 1);
  CHECK_THROWS_AS(enumerate_lna(4, 2), argument_error);
}

TEST_CASE("L(n,a) enumeration matches brute force") {
  for (int n = 3; n <= 16; ++n)
    for (int a = 0; a <= n - 3; ++a) {
      const auto fs = enumerate_lna(n, a);
      std::set<std::vector<int>> seen;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        CHECK(fs[i].total() == n - 2);
        CHECK(fs[i].part_count() == a + 1);
        CHECK(fs[i].size() == n - 2 - (a + 1));
        if (i > 0) CHECK(fs[i - 1] > fs[i]);  // strictly reverse-lexicographic
        seen.insert(fs[i].parts());
      }
      CHECK(seen.size() == fs.size());
      CHECK(seen == brute_partitions(n - 2, a + 1));
      CHECK(static_cast<long>(fs.size()) == count_partitions(n - 2, a + 1, n - 2));
    }
}

TEST_CASE("streaming enumerator handles large totals") {
  LnaEnumerator e(259, 2);
  long count = 0;
  std::optional<LinearForest> first;
  while (auto f = e.next()) {
    if (!first) first = f;
    ++count;
  }
  CHECK(first->parts() == std::vector<int>{255, 1, 1});
  CHECK(count == count_partitions(257, 3, 257));
  CHECK(count == 5504);
}

TEST_CASE("partitions_up_to groups by part count") {
  const auto ps = partitions_up_to(6, 3);
  CHECK(ps.size() == 1 + 3 + 3);
  CHECK(ps.front().parts() == std::vector<int>{6});
  CHECK(ps[1].parts() == std::vector<int>{5, 1});
  CHECK(ps.back().parts() == std::vector<int>{2, 2, 2});
}
