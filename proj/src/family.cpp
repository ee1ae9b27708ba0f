#include "spex/family.hpp"

#include <regex>
#include <string>
#include <vector>

#include "spex/constructions.hpp"
#include "spex/error.hpp"
#include "spex/graph6.hpp"

namespace spex {

namespace {

int to_int(const std::string& s) {
  if (s.size() > 9) throw argument_error("family parameter too large: " + s);
  return std::stoi(s);
}

}  // namespace

std::optional<Graph> parse_family(std::string_view text, bool dominating_edge) {
  static const std::regex path_re(R"(P(\d+))");
  static const std::regex cycle_re(R"(C(\d+))");
  static const std::regex complete_re(R"(K(\d+))");
  static const std::regex bipartite_re(R"(K(\d+),(\d+))");
  static const std::regex join_re(R"(k2\+\[(\d+(?:,\d+)*)\])");
  static const std::regex extremal_re(R"(extremal\((\d+),(\d+)\))");

  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, path_re)) {
    const int n = to_int(m[1]);
    if (n < 1) throw argument_error("P needs n >= 1");
    return path_graph(n);
  }
  if (std::regex_match(s, m, cycle_re)) return cycle_graph(to_int(m[1]));
  if (std::regex_match(s, m, complete_re)) {
    const int n = to_int(m[1]);
    if (n < 1) throw argument_error("K needs n >= 1");
    return complete_graph(n);
  }
  if (std::regex_match(s, m, bipartite_re)) {
    const int a = to_int(m[1]);
    const int b = to_int(m[2]);
    if (a < 1 || b < 1) throw argument_error("K_{a,b} needs a, b >= 1");
    return complete_bipartite(a, b);
  }
  if (std::regex_match(s, m, join_re)) {
    std::vector<int> parts;
    const std::string list = m[1];
    std::size_t at = 0;
    while (at <= list.size()) {
      const std::size_t comma = list.find(',', at);
      parts.push_back(to_int(list.substr(at, comma - at)));
      if (comma == std::string::npos) break;
      at = comma + 1;
    }
    return k2_join(LinearForest(parts), dominating_edge);
  }
  if (std::regex_match(s, m, extremal_re)) return extremal_graph(to_int(m[1]), to_int(m[2]));
  return std::nullopt;
}

Graph parse_graph_argument(std::string_view text, bool dominating_edge) {
  if (auto g = parse_family(text, dominating_edge)) return std::move(*g);
  return from_graph6(text);
}

}  // namespace spex
