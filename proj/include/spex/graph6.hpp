#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "spex/graph.hpp"

namespace spex {

/// graph6 text for `g` (no header line, no trailing newline).
std::string to_graph6(const Graph& g);

/// Parses one graph6 record. An optional ">>graph6<<" prefix is accepted.
/// Throws parse_error carrying the offending byte offset.
Graph from_graph6(std::string_view text);

/// Plain edge-list text: first line `n`, then one `u v` pair per line.
Graph from_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

/// Reads a whole stream and decides between graph6 and edge-list input.
Graph read_graph(std::istream& in);

}  // namespace spex
