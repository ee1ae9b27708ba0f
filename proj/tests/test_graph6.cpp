#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles/random_graphs.hpp"
#include "spex/error.hpp"
#include "spex/graph.hpp"
#include "spex/graph6.hpp"

using namespace spex;

// Expected strings were produced by networkx.to_graph6_bytes and checked by
// hand-packing the upper-triangle bits column by column.
TEST_CASE("graph6 encodes the reference examples") {
  CHECK(to_graph6(complete_graph(2)) == "A_");
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(path_graph(3)) == "Bg");
  CHECK(to_graph6(path_graph(5)) == "DhC");
  CHECK(to_graph6(complete_bipartite(2, 8)) == "I]rEEB?o?");
  CHECK(to_graph6(empty_graph(0)) == "?");
}

TEST_CASE("graph6 extended header for n >= 63") {
  const std::string c70 = "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@??????????C??????????G??????????G??????????C??????????@_??????????G";
  CHECK(to_graph6(cycle_graph(70)) == c70);
  CHECK(from_graph6(c70) == cycle_graph(70));
  const Graph big = path_graph(300);
  const std::string text = to_graph6(big);
  CHECK(text.substr(0, 4) == std::string{'~', char(63), char(63 + 4), char(63 + 44)});
  CHECK(from_graph6(text) == big);
}

TEST_CASE("graph6 decoding accepts the optional header and a trailing newline") {
  CHECK(from_graph6(">>graph6<<Bw") == complete_graph(3));
  CHECK(from_graph6("Bg\n") == path_graph(3));
}

TEST_CASE("graph6 decoding reports the byte offset of errors") {
  auto offset_of = [](std::string_view s) -> long {
    try {
      from_graph6(s);
    } catch (const parse_error& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);           // missing header
  CHECK(offset_of("B") == 1);          // body truncated
  CHECK(offset_of("Bww") == 2);        // one byte too many
  CHECK(offset_of("Bx") == 1);         // padding bits set (x = 57 = 111001)
  CHECK(offset_of("A ") == 1);         // byte below 63
  CHECK(offset_of("~?") == 2);         // truncated extended header
}

TEST_CASE("graph6 round trip on random graphs up to n = 62") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 62)(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const Graph g = oracle::random_graph(n, p, rng);
    const std::string text = to_graph6(g);
    REQUIRE(from_graph6(text) == g);
    REQUIRE(to_graph6(from_graph6(text)) == text);
  }
}

TEST_CASE("edge-list text") {
  std::istringstream in("4\n0 1\n1 2\n2 3\n3 0\n");
  CHECK(from_edge_list(in) == cycle_graph(4));
  CHECK(to_edge_list(path_graph(3)) == "3\n0 1\n1 2\n");

  std::istringstream bad("3\n0 x\n");
  CHECK_THROWS_AS(from_edge_list(bad), parse_error);
  std::istringstream loop("3\n1 1\n");
  CHECK_THROWS_AS(from_edge_list(loop), construction_error);
}

TEST_CASE("read_graph tells the formats apart") {
  std::istringstream g6("Bw\n");
  CHECK(read_graph(g6) == complete_graph(3));
  std::istringstream edges("3\n0 1\n1 2\n");
  CHECK(read_graph(edges) == path_graph(3));
}
