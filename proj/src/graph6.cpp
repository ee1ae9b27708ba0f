#include "spex/graph6.hpp"

#include <cctype>
#include <cstdint>
#include <iterator>
#include <sstream>
#include <vector>

#include "spex/error.hpp"

namespace spex {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

int sextet(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw parse_error("graph6 record truncated", pos);
  const int c = static_cast<unsigned char>(s[pos]);
  if (c < kBias || c > 126) throw parse_error("graph6 byte out of range", pos);
  return c - kBias;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  put_size(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  std::uint64_t n = 0;
  if (pos < text.size() && text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      pos += 2;
      for (int i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++));
    } else {
      ++pos;
      for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++));
    }
  } else {
    n = static_cast<std::uint64_t>(sextet(text, pos++));
  }
  if (n > 1u << 20) throw parse_error("graph6 order too large for this tool", pos);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != body) {
    throw parse_error("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                          std::to_string(body),
                      text.size() < pos + body ? text.size() : pos + body);
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text, pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int pad_mask = (1 << (6 - k % 6)) - 1;
    if (sextet(text, last) & pad_mask) throw parse_error("graph6 padding bits are not zero", last);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph from_edge_list(std::istream& in) {
  long n = -1;
  if (!(in >> n) || n < 0) throw parse_error("edge list must start with a vertex count", 0);
  std::vector<Edge> edges;
  long u = 0;
  long v = 0;
  while (in >> u >> v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  if (!in.eof()) throw parse_error("malformed edge line", static_cast<std::size_t>(edges.size() + 1));
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph read_graph(std::istream& in) {
  std::string all{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::size_t first = 0;
  while (first < all.size() && std::isspace(static_cast<unsigned char>(all[first]))) ++first;
  std::size_t end = all.find_first_of("\r\n", first);
  std::string line = all.substr(first, end == std::string::npos ? std::string::npos : end - first);
  bool numeric = !line.empty();
  for (char c : line) numeric = numeric && (std::isdigit(static_cast<unsigned char>(c)) || c == ' ' || c == '\t');
  // graph6 bytes live in 63..126, so a line of digits can only be an edge-list header.
  if (numeric) {
    std::istringstream is(all);
    return from_edge_list(is);
  }
  return from_graph6(line);
}

}  // namespace spex
