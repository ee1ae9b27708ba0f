#pragma once

#include "spex/graph.hpp"

namespace spex {

/// Exact planarity test (Boyer-Myrvold edge addition, linear time).
bool is_planar(const Graph& g);

}  // namespace spex
