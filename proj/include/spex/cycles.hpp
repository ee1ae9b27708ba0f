#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spex/constructions.hpp"
#include "spex/graph.hpp"

namespace spex {

inline constexpr long kDefaultCycleBudget = 50'000'000;

enum class CycleStatus { present, absent, budget };

std::string_view to_string(CycleStatus s);

struct CycleSearch {
  CycleStatus status = CycleStatus::absent;
  std::vector<Vertex> cycle;  // filled when present
  long nodes = 0;             // search-tree nodes visited
};

/// True when `cycle` lists `ell` distinct vertices, consecutive ones adjacent
/// and the last adjacent to the first.
bool is_valid_cycle(const Graph& g, std::span<const Vertex> cycle, int ell);

/// Exact backtracking search for a cycle of length `ell`.
///
/// Each cycle is enumerated once: rooted at its smallest vertex and oriented
/// so the second vertex is smaller than the last. Branches are cut when the
/// unvisited region reachable from the path end is too small or too far from
/// the root. Exceeding `budget` search nodes yields CycleStatus::budget, never
/// `absent`. Throws argument_error unless 3 <= ell <= n.
CycleSearch find_cycle(const Graph& g, int ell, long budget = kDefaultCycleBudget);

/// Two join vertices plus the vertex sequences of the paths of a linear forest.
struct JoinStructure {
  Vertex hub_a = kHubA;
  Vertex hub_b = kHubB;
  bool dominating_edge = true;
  std::vector<std::vector<Vertex>> paths;  // longest first

  int order() const;
  /// Length of a longest cycle, 0 when the graph is acyclic.
  int longest_cycle() const;
  bool has_cycle(int ell) const;
};

/// The structure of k2_join(forest, dominating_edge) under the standard layout.
JoinStructure join_structure(const LinearForest& forest, bool dominating_edge = true);

/// Recognises K2 v L: exactly two vertices adjacent to all others, the rest
/// inducing a linear forest. Exact, not heuristic.
std::optional<JoinStructure> recognize_join(const Graph& g);

/// Search-free cycle of length `ell` through the join vertices and path
/// prefixes, or nullopt when K2 v L has no such cycle. Throws argument_error
/// for ell < 3.
std::optional<std::vector<Vertex>> join_cycle_certificate(const JoinStructure& js, int ell);
std::optional<std::vector<Vertex>> join_cycle_certificate(const LinearForest& forest, int ell,
                                                          bool dominating_edge = true);

struct CycleSpectrum {
  int n = 0;
  int ell_max = 0;
  bool fast_path = false;
  std::vector<CycleStatus> status;               // indexed by length, 0..ell_max
  std::vector<std::vector<Vertex>> certificates;  // indexed by length

  bool present(int ell) const {
    return ell >= 3 && ell <= ell_max && status[static_cast<std::size_t>(ell)] == CycleStatus::present;
  }
  std::vector<int> present_lengths() const;
};

struct SpectrumOptions {
  long budget = kDefaultCycleBudget;  // per length
  bool use_fast_path = true;
  bool cross_check = false;  // also run the exact search where the fast path applies
  int threads = 1;
};

/// Status of every length 3..ell_max. Throws argument_error if ell_max > n,
/// and std::logic_error if a cross-check ever disagrees.
CycleSpectrum cycle_spectrum(const Graph& g, int ell_max, const SpectrumOptions& opts = {});

enum class MembershipStatus { member, not_member, undetermined };

struct Membership {
  MembershipStatus status = MembershipStatus::not_member;
  std::optional<int> witness;  // smallest missing length <= n-k
  bool member() const { return status == MembershipStatus::member; }
};

/// Membership in G(n,k): planar graphs of order n missing some cycle length
/// in [3, n-k]. Throws argument_error for non-planar input or k outside [0, n-3].
Membership in_gnk(const Graph& g, int k, const SpectrumOptions& opts = {});

}  // namespace spex
