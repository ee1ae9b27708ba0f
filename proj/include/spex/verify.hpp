#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "spex/constructions.hpp"
#include "spex/parallel.hpp"
#include "spex/spectral.hpp"

namespace spex {

struct Margin {
  std::string name;
  double value = 0.0;
};

/// Outcome of one numerical check. Self-contained: `params` plus the tolerance
/// reproduce it exactly, and `artifacts` hold the graphs involved as graph6.
struct VerificationReport {
  std::string check_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Certainty holds = Certainty::indeterminate;
  std::vector<Margin> margins;
  std::vector<std::string> artifacts;
  bool dominating_edge = true;
  bool within_hypothesis = true;
  // Per-point tallies for sweeps; a single check counts itself once.
  long certified = 0;
  long violated = 0;
  long indeterminate = 0;

  double margin(std::string_view name) const;  // throws std::out_of_range
  void tally(Certainty c);
};

struct VerifyOptions {
  SpectralOptions spectral;
  bool force = false;  // allow parameters below the proven threshold; flagged in the report
  int threads = worker_count();
};

/// rho(K2 v L2) > rho(K2 v L1) for L_i in L(n, a_i), 0 <= a2 < a1 <= sqrt(2n-4)/4.
/// Both joins are built without the u'u'' edge. Throws argument_error naming
/// the failed hypothesis.
VerificationReport verify_lemma1(int n, int a1, int a2, const LinearForest& l1, const LinearForest& l2,
                                 const VerifyOptions& opts = {});

/// Parameters shared by the path-merge checks: the forest is
/// P_{n1} u P_{n2} u L with |V(L)| = n - 2 - n1 - n2 (L may be empty).
struct PathMergeParams {
  int n = 0;
  int k = 0;
  int n1 = 0;
  int n2 = 0;
  std::vector<int> rest;
};

/// rho(K2 v (P_{n1+n2-k-1} u P_{k+1} u L)) > rho(K2 v (P_{n1} u P_{n2} u L)).
/// Requires n1 >= n2 >= k+2 >= 2 and n >= 2^(k+8)+3 (the latter waived by
/// opts.force, which marks the report as outside the hypothesis). Also
/// records the edge-swap Rayleigh lower bound for diagnostics.
VerificationReport verify_lemma2(const PathMergeParams& p, const VerifyOptions& opts = {});

enum class IntervalKind { a, b };

/// rho^i times an entry difference, with the interval it must land in:
/// kind a: [2/rho - 8*2^i/rho^2, 2/rho + 8*2^i/rho^2], kind b: [-8*2^i/rho^2, 8*2^i/rho^2].
struct IntervalWitness {
  int i = 0;
  std::string label;  // "u", "w" (consecutive differences) or "u-w"
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  IntervalKind kind = IntervalKind::a;
  bool contained = false;
};

IntervalWitness make_interval_witness(int i, IntervalKind kind, double rho, double value, std::string label,
                                      double slack);

struct Claim33Result {
  VerificationReport report;
  std::vector<IntervalWitness> witnesses;
};

/// Perron-entry interval witnesses along the two merged paths, plus the strict
/// monotonicity consequences x_{u_{i+1}} > x_{u_i}, x_{u_{i+1}} > x_{w_i} and
/// the mirrored pair for w.
Claim33Result verify_claim33(const PathMergeParams& p, const VerifyOptions& opts = {});

/// Every forest entry of the max-normalised Perron vector of K2 v L (no u'u''
/// edge) lies in [2/rho, 2/rho + 8/rho^2] and both join vertices equal 1.
VerificationReport verify_entry_bounds(int n, const LinearForest& forest, const VerifyOptions& opts = {});

struct ArgmaxResult {
  VerificationReport report;
  long candidates = 0;
  LinearForest best{std::vector<int>{1}};
  std::vector<LinearForest> ties;  // within the indeterminacy margin of the best, best first
};

/// Maximises rho(K2 v L) over forests of order n-2 with at most max_parts paths
/// and n1 + n2 <= n-k-3, and checks the winner is [n-2k-4, k+1, k+1].
ArgmaxResult argmax_sweep(int n, int k, int max_parts = 3, const VerifyOptions& opts = {});

/// Number of partitions of `total` into exactly `parts` parts.
std::int64_t partition_count(int total, int parts);

/// All (a1, a2, L1, L2) with a2 < a1 <= sqrt(2n-4)/4; per-pair tallies and the
/// worst gap are recorded in one summary report.
VerificationReport lemma1_sweep(int n, const VerifyOptions& opts = {});

struct PathMergeSweep {
  VerificationReport summary;
  std::vector<VerificationReport> points;  // lemma2 and claim33 report per (n1, n2), in order
};

/// All n1 >= n2 >= k+2 with n1 + n2 = pair_sum; the remainder (if any) is one path.
PathMergeSweep lemma2_sweep(int n, int k, int pair_sum, const VerifyOptions& opts = {});

struct EntryBoundsSweep {
  VerificationReport summary;
  std::vector<VerificationReport> points;
};

/// `samples` random (n, L) pairs with n uniform in [n_min, n_max].
EntryBoundsSweep entry_bounds_sweep(int samples, std::uint64_t seed, int n_min, int n_max,
                                    const VerifyOptions& opts = {});

/// Recomputes a lemma1 / lemma2 / entry_bounds / argmax report from its
/// artifacts alone and returns the outcome.
Certainty revalidate(const VerificationReport& report, const SpectralOptions& opts = {});

}  // namespace spex
