#pragma once

#include <optional>
#include <string_view>

#include "spex/graph.hpp"

namespace spex {

// Family mini-language:
//   Pn          path on n vertices
//   Cn          cycle on n vertices
//   Kn          complete graph
//   Ka,b        complete bipartite graph
//   k2+[p,...]  K2 joined with the linear forest of the given path orders
//   extremal(n,k)
//
// `dominating_edge` only affects k2+[...]: when false the two join vertices
// are left non-adjacent.

/// nullopt when `text` is not a family expression; argument_error when it is
/// one but the parameters are invalid.
std::optional<Graph> parse_family(std::string_view text, bool dominating_edge = true);

/// Family expression if it parses as one, otherwise graph6.
Graph parse_graph_argument(std::string_view text, bool dominating_edge = true);

}  // namespace spex
