#include "spex/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "spex/error.hpp"
#include "spex/graph6.hpp"

namespace spex {

double VerificationReport::margin(std::string_view name) const {
  for (const auto& m : margins)
    if (m.name == name) return m.value;
  throw std::out_of_range("no margin named " + std::string(name));
}

void VerificationReport::tally(Certainty c) {
  switch (c) {
    case Certainty::certified:
      ++certified;
      break;
    case Certainty::violated:
      ++violated;
      break;
    case Certainty::indeterminate:
      ++indeterminate;
      break;
  }
}

namespace {

// Worst of a set of outcomes: any violation wins, then any indeterminate.
Certainty combine(Certainty a, Certainty b) {
  if (a == Certainty::violated || b == Certainty::violated) return Certainty::violated;
  if (a == Certainty::indeterminate || b == Certainty::indeterminate) return Certainty::indeterminate;
  return Certainty::certified;
}

Certainty overall(const VerificationReport& r) {
  if (r.violated > 0) return Certainty::violated;
  if (r.indeterminate > 0) return Certainty::indeterminate;
  return Certainty::certified;
}

Certainty contained(double value, double lo, double hi, double slack) {
  return (value >= lo - slack && value <= hi + slack) ? Certainty::certified : Certainty::violated;
}

nlohmann::ordered_json parts_json(const std::vector<int>& parts) { return nlohmann::ordered_json(parts); }

// Largest a with a <= sqrt(2n-4)/4, in integers.
int lemma1_max_deficiency(int n) {
  int a = 0;
  while (16L * (a + 1) * (a + 1) <= 2L * n - 4) ++a;
  return a;
}

bool path_merge_threshold_met(int n, int k) {
  if (k + 8 >= 62) return false;
  return static_cast<std::int64_t>(n) >= (std::int64_t{1} << (k + 8)) + 3;
}

struct MergedForest {
  LinearForest before{std::vector<int>{1}};
  LinearForest after{std::vector<int>{1}};
  Vertex u_start = 0;  // label of u_1
  Vertex w_start = 0;  // label of w_1
};

MergedForest merged_forests(const PathMergeParams& p, bool force) {
  if (p.k < 0) throw argument_error("k must be non-negative");
  if (p.n1 < p.n2) throw argument_error("hypothesis n1 >= n2 failed");
  if (p.n2 < p.k + 2) throw argument_error("hypothesis n2 >= k+2 failed");
  if (!force && !path_merge_threshold_met(p.n, p.k)) {
    throw argument_error("hypothesis n >= 2^(k+8)+3 failed (n=" + std::to_string(p.n) + ", k=" + std::to_string(p.k) +
                         "); use force to explore below it");
  }
  long rest_total = 0;
  for (int r : p.rest) {
    if (r < 1) throw argument_error("rest parts must be at least 1");
    rest_total += r;
  }
  if (rest_total != static_cast<long>(p.n) - 2 - p.n1 - p.n2) {
    throw argument_error("hypothesis |V(L)| = n-2-n1-n2 failed");
  }

  std::vector<int> before{p.n1, p.n2};
  std::vector<int> after{p.n1 + p.n2 - (p.k + 1), p.k + 1};
  before.insert(before.end(), p.rest.begin(), p.rest.end());
  after.insert(after.end(), p.rest.begin(), p.rest.end());
  MergedForest m{LinearForest(before), LinearForest(after), 0, 0};

  const auto starts = join_block_starts(m.before);
  const auto& parts = m.before.parts();
  std::size_t ui = parts.size();
  for (std::size_t b = 0; b < parts.size(); ++b)
    if (parts[b] == p.n1) {
      ui = b;
      break;
    }
  std::size_t wi = parts.size();
  for (std::size_t b = 0; b < parts.size(); ++b)
    if (b != ui && parts[b] == p.n2) {
      wi = b;
      break;
    }
  m.u_start = starts[ui];
  m.w_start = starts[wi];
  return m;
}

nlohmann::ordered_json merge_params(const PathMergeParams& p, double tol) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  j["k"] = p.k;
  j["n1"] = p.n1;
  j["n2"] = p.n2;
  j["L"] = parts_json(p.rest);
  j["tol"] = tol;
  return j;
}

}  // namespace

VerificationReport verify_lemma1(int n, int a1, int a2, const LinearForest& l1, const LinearForest& l2,
                                 const VerifyOptions& opts) {
  if (n < 4) throw argument_error("hypothesis n >= 4 failed");
  if (a2 < 0 || a2 >= a1) throw argument_error("hypothesis 0 <= a2 < a1 failed");
  if (a1 > lemma1_max_deficiency(n)) throw argument_error("hypothesis a1 <= sqrt(2n-4)/4 failed");
  if (l1.total() != n - 2 || l1.deficiency() != a1) throw argument_error("L1 is not in L(n, a1)");
  if (l2.total() != n - 2 || l2.deficiency() != a2) throw argument_error("L2 is not in L(n, a2)");

  const double tol = opts.spectral.tol;
  const Graph g1 = k2_join(l1, false);
  const Graph g2 = k2_join(l2, false);
  const SpectralResult r1 = spectral_radius(g1, opts.spectral);
  const SpectralResult r2 = spectral_radius(g2, opts.spectral);

  VerificationReport rep;
  rep.check_id = "lemma1";
  rep.params["n"] = n;
  rep.params["a1"] = a1;
  rep.params["a2"] = a2;
  rep.params["L1"] = parts_json(l1.parts());
  rep.params["L2"] = parts_json(l2.parts());
  rep.params["tol"] = tol;
  rep.dominating_edge = false;
  rep.tally(certify_greater(r2.rho, r1.rho, tol, tol));
  rep.holds = overall(rep);
  rep.margins = {{"rho_L1", r1.rho},
                 {"rho_L2", r2.rho},
                 {"gap", r2.rho - r1.rho},
                 {"rayleigh_lower_bound", rayleigh_quotient(g2, r1.x) - r1.rho}};
  rep.artifacts = {to_graph6(g1), to_graph6(g2)};
  return rep;
}

VerificationReport verify_lemma2(const PathMergeParams& p, const VerifyOptions& opts) {
  const MergedForest m = merged_forests(p, opts.force);
  const double tol = opts.spectral.tol;
  const Graph g1 = k2_join(m.before, true);
  const Graph g2 = k2_join(m.after, true);
  const SpectralResult r1 = spectral_radius(g1, opts.spectral);
  const SpectralResult r2 = spectral_radius(g2, opts.spectral);
  const auto& x = r1.x;

  // Edge swap on the two paths: drop u_t1 u_t1+1 and w_t2 w_t2+1, add u_t1 w_t2
  // and u_t1+1 w_t2+1 with t1 + t2 = k+1; index 0 means "no vertex".
  auto u = [&](int i) { return m.u_start + i - 1; };
  auto w = [&](int i) { return m.w_start + i - 1; };
  auto xu = [&](int i) { return i == 0 ? 0.0 : x[static_cast<std::size_t>(u(i))]; };
  auto xw = [&](int i) { return i == 0 ? 0.0 : x[static_cast<std::size_t>(w(i))]; };
  int t1 = 0;
  int t2 = 0;
  if (p.k % 2 == 1) {
    t1 = t2 = (p.k + 1) / 2;
  } else if (xu((p.k + 2) / 2) >= xw((p.k + 2) / 2)) {
    t1 = p.k / 2;
    t2 = (p.k + 2) / 2;
  } else {
    t1 = (p.k + 2) / 2;
    t2 = p.k / 2;
  }
  double norm = 0.0;
  for (double v : x) norm += v * v;
  const double swap_bound = 2.0 / norm * (xu(t1 + 1) - xw(t2)) * (xw(t2 + 1) - xu(t1));

  std::vector<Edge> es;
  for (auto e : g1.edges()) {
    const bool cut_u = t1 > 0 && e == Edge{u(t1), u(t1 + 1)};
    const bool cut_w = t2 > 0 && e == Edge{w(t2), w(t2 + 1)};
    if (!cut_u && !cut_w) es.push_back(e);
  }
  if (t1 > 0 && t2 > 0) es.emplace_back(u(t1), w(t2));
  es.emplace_back(u(t1 + 1), w(t2 + 1));
  const Graph swapped = Graph::from_edges(g1.order(), es);

  VerificationReport rep;
  rep.check_id = "lemma2";
  rep.params = merge_params(p, tol);
  rep.dominating_edge = true;
  rep.within_hypothesis = path_merge_threshold_met(p.n, p.k);
  rep.tally(certify_greater(r2.rho, r1.rho, tol, tol));
  rep.holds = overall(rep);
  rep.margins = {{"rho_before", r1.rho},
                 {"rho_after", r2.rho},
                 {"gap", r2.rho - r1.rho},
                 {"t1", static_cast<double>(t1)},
                 {"t2", static_cast<double>(t2)},
                 {"swap_bound", swap_bound},
                 {"swap_rayleigh_gap", rayleigh_quotient(swapped, x) - r1.rho}};
  rep.artifacts = {to_graph6(g1), to_graph6(g2)};
  return rep;
}

IntervalWitness make_interval_witness(int i, IntervalKind kind, double rho, double value, std::string label,
                                      double slack) {
  IntervalWitness wit;
  wit.i = i;
  wit.kind = kind;
  wit.value = value;
  wit.label = std::move(label);
  const double spread = 8.0 * std::ldexp(1.0, i) / (rho * rho);
  const double centre = kind == IntervalKind::a ? 2.0 / rho : 0.0;
  wit.lo = centre - spread;
  wit.hi = centre + spread;
  wit.contained = contained(value, wit.lo, wit.hi, slack) == Certainty::certified;
  return wit;
}

Claim33Result verify_claim33(const PathMergeParams& p, const VerifyOptions& opts) {
  const MergedForest m = merged_forests(p, opts.force);
  const double tol = opts.spectral.tol;
  const Graph g = k2_join(m.before, true);
  const SpectralResult r = spectral_radius(g, opts.spectral);
  const double rho = r.rho;
  auto xu = [&](int i) { return r.x[static_cast<std::size_t>(m.u_start + i - 1)]; };
  auto xw = [&](int i) { return r.x[static_cast<std::size_t>(m.w_start + i - 1)]; };

  Claim33Result out;
  VerificationReport& rep = out.report;
  rep.check_id = "claim33";
  rep.params = merge_params(p, tol);
  rep.dominating_edge = true;
  rep.within_hypothesis = path_merge_threshold_met(p.n, p.k);

  const int range_a = (p.k + 2) / 2;
  const int range_b = (p.k + 3) / 2;
  double worst_interval_slack = std::numeric_limits<double>::infinity();
  auto record = [&](IntervalWitness wit) {
    rep.tally(wit.contained ? Certainty::certified : Certainty::violated);
    worst_interval_slack = std::min({worst_interval_slack, wit.value - wit.lo, wit.hi - wit.value});
    out.witnesses.push_back(std::move(wit));
  };
  for (int i = 1; i <= range_a; ++i) {
    const double scale = std::pow(rho, i);
    const double slack = 20.0 * tol * scale;
    record(make_interval_witness(i, IntervalKind::a, rho, scale * (xu(i + 1) - xu(i)), "u", slack));
    record(make_interval_witness(i, IntervalKind::a, rho, scale * (xw(i + 1) - xw(i)), "w", slack));
  }
  for (int i = 1; i <= range_b; ++i) {
    const double scale = std::pow(rho, i);
    record(make_interval_witness(i, IntervalKind::b, rho, scale * (xu(i) - xw(i)), "u-w", 20.0 * tol * scale));
  }

  // Monotone consequences of the intervals: each difference must clear its
  // explicit lower bound, and that bound must itself be positive.
  double worst_monotone = std::numeric_limits<double>::infinity();
  const double slack = 20.0 * tol;
  for (int i = 1; i <= range_a; ++i) {
    const double step = 2.0 / std::pow(rho, i + 1) - 8.0 * std::ldexp(1.0, i) / std::pow(rho, i + 2);
    const double cross = step - 8.0 * std::ldexp(1.0, i) / std::pow(rho, i + 2);
    const double diffs[] = {xu(i + 1) - xu(i), xw(i + 1) - xw(i), xu(i + 1) - xw(i), xw(i + 1) - xu(i)};
    const double bounds[] = {step, step, cross, cross};
    for (int j = 0; j < 4; ++j) {
      Certainty c = diffs[j] >= bounds[j] - slack ? Certainty::certified : Certainty::violated;
      c = combine(c, bounds[j] > 0.0 ? Certainty::certified : Certainty::violated);
      c = combine(c, certify_greater(diffs[j], 0.0, tol, tol));
      rep.tally(c);
      worst_monotone = std::min(worst_monotone, diffs[j]);
    }
  }
  rep.holds = overall(rep);
  rep.margins = {{"rho", rho},
                 {"min_interval_slack", worst_interval_slack},
                 {"min_monotone_difference", worst_monotone}};
  rep.artifacts = {to_graph6(g)};
  return out;
}

VerificationReport verify_entry_bounds(int n, const LinearForest& forest, const VerifyOptions& opts) {
  if (n < 4) throw argument_error("entry bounds need n >= 4");
  if (forest.total() != n - 2) throw argument_error("forest order must be n-2");
  const double tol = opts.spectral.tol;
  const Graph g = k2_join(forest, false);
  const SpectralResult r = spectral_radius(g, opts.spectral);
  const double lo = 2.0 / r.rho;
  const double hi = lo + 8.0 / (r.rho * r.rho);
  const double slack = 10.0 * tol;

  VerificationReport rep;
  rep.check_id = "entry_bounds";
  rep.params["n"] = n;
  rep.params["L"] = parts_json(forest.parts());
  rep.params["tol"] = tol;
  rep.dominating_edge = false;

  double lower_slack = std::numeric_limits<double>::infinity();
  double upper_slack = std::numeric_limits<double>::infinity();
  for (Vertex v = kForestOffset; v < g.order(); ++v) {
    const double xv = r.x[static_cast<std::size_t>(v)];
    lower_slack = std::min(lower_slack, xv - lo);
    upper_slack = std::min(upper_slack, hi - xv);
    rep.tally(contained(xv, lo, hi, slack));
  }
  const double hub_dev = std::max(std::fabs(r.x[kHubA] - 1.0), std::fabs(r.x[kHubB] - 1.0));
  rep.tally(hub_dev <= slack ? Certainty::certified : Certainty::violated);
  rep.holds = overall(rep);
  rep.margins = {{"rho", r.rho},
                 {"min_lower_slack", lower_slack},
                 {"min_upper_slack", upper_slack},
                 {"hub_deviation", hub_dev}};
  rep.artifacts = {to_graph6(g)};
  return rep;
}

std::int64_t partition_count(int total, int parts) {
  if (total < 0 || parts < 0) return 0;
  // table[t][m]: partitions of t into exactly m parts.
  std::vector<std::vector<std::int64_t>> table(static_cast<std::size_t>(total) + 1,
                                               std::vector<std::int64_t>(static_cast<std::size_t>(parts) + 1, 0));
  table[0][0] = 1;
  for (int t = 1; t <= total; ++t)
    for (int m = 1; m <= std::min(t, parts); ++m) table[t][m] = table[t - 1][m - 1] + table[t - m][m];
  return table[total][parts];
}

ArgmaxResult argmax_sweep(int n, int k, int max_parts, const VerifyOptions& opts) {
  if (max_parts < 3) throw argument_error("max_parts must be at least 3");
  if (k < 0) throw argument_error("k must be non-negative");
  if (!opts.force && !path_merge_threshold_met(n, k)) {
    throw argument_error("argmax sweep needs n >= 2^(k+8)+3 (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  const LinearForest expected = extremal_forest(n, k);
  std::vector<LinearForest> candidates;
  for (auto& f : partitions_up_to(n - 2, max_parts))
    if (f.longest_pair() <= n - k - 3) candidates.push_back(std::move(f));
  if (candidates.empty()) throw argument_error("no forest satisfies n1 + n2 <= n-k-3");

  std::vector<double> rho(candidates.size());
  parallel_for(
      candidates.size(),
      [&](std::size_t i) { rho[i] = spectral_radius(k2_join(candidates[i], true), opts.spectral).rho; },
      opts.threads);

  const double tol = opts.spectral.tol;
  std::size_t best = 0;
  for (std::size_t i = 1; i < rho.size(); ++i)
    if (rho[i] > rho[best]) best = i;

  ArgmaxResult out;
  out.candidates = static_cast<long>(candidates.size());
  out.best = candidates[best];
  out.ties.push_back(candidates[best]);
  double runner_up = -std::numeric_limits<double>::infinity();
  double rho_expected = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (candidates[i] == expected) rho_expected = rho[i];
    if (i == best) continue;
    runner_up = std::max(runner_up, rho[i]);
    if (certify_greater(rho[best], rho[i], tol, tol) != Certainty::certified) out.ties.push_back(candidates[i]);
  }

  VerificationReport& rep = out.report;
  rep.check_id = "argmax";
  rep.params["n"] = n;
  rep.params["k"] = k;
  rep.params["max_parts"] = max_parts;
  rep.params["tol"] = tol;
  rep.dominating_edge = true;
  rep.within_hypothesis = path_merge_threshold_met(n, k);
  const bool expected_on_top = std::find(out.ties.begin(), out.ties.end(), expected) != out.ties.end();
  if (!expected_on_top) {
    rep.tally(Certainty::violated);
  } else if (out.ties.size() > 1) {
    rep.tally(Certainty::indeterminate);
  } else {
    rep.tally(Certainty::certified);
  }
  rep.holds = overall(rep);
  rep.params["best"] = parts_json(out.best.parts());
  rep.margins = {{"candidates", static_cast<double>(candidates.size())},
                 {"rho_best", rho[best]},
                 {"rho_expected", rho_expected},
                 {"gap_to_runner_up", rho.size() > 1 ? rho[best] - runner_up : 0.0},
                 {"ties", static_cast<double>(out.ties.size())}};
  rep.artifacts = {to_graph6(k2_join(out.best, true))};
  return out;
}

VerificationReport lemma1_sweep(int n, const VerifyOptions& opts) {
  if (n < 4) throw argument_error("lemma1 sweep needs n >= 4");
  const int amax = std::min(lemma1_max_deficiency(n), n - 3);
  std::vector<std::vector<LinearForest>> families;
  for (int a = 0; a <= amax; ++a) families.push_back(enumerate_lna(n, a));

  std::vector<std::pair<int, std::size_t>> index;
  for (int a = 0; a <= amax; ++a)
    for (std::size_t i = 0; i < families[a].size(); ++i) index.emplace_back(a, i);
  std::vector<double> flat(index.size());
  parallel_for(
      index.size(),
      [&](std::size_t j) {
        const auto& f = families[index[j].first][index[j].second];
        flat[j] = spectral_radius(k2_join(f, false), opts.spectral).rho;
      },
      opts.threads);
  std::vector<std::vector<double>> rho(families.size());
  for (std::size_t j = 0; j < index.size(); ++j) rho[index[j].first].push_back(flat[j]);

  const double tol = opts.spectral.tol;
  VerificationReport rep;
  rep.check_id = "lemma1_sweep";
  rep.params["n"] = n;
  rep.params["a_max"] = amax;
  rep.params["tol"] = tol;
  rep.dominating_edge = false;
  double worst = std::numeric_limits<double>::infinity();
  std::pair<const LinearForest*, const LinearForest*> worst_pair{nullptr, nullptr};
  for (int a1 = 1; a1 <= amax; ++a1)
    for (int a2 = 0; a2 < a1; ++a2)
      for (std::size_t i = 0; i < families[a1].size(); ++i)
        for (std::size_t j = 0; j < families[a2].size(); ++j) {
          const double gap = rho[a2][j] - rho[a1][i];
          rep.tally(certify_greater(rho[a2][j], rho[a1][i], tol, tol));
          if (gap < worst) {
            worst = gap;
            worst_pair = {&families[a1][i], &families[a2][j]};
          }
        }
  rep.holds = overall(rep);
  rep.margins = {{"pairs", static_cast<double>(rep.certified + rep.violated + rep.indeterminate)},
                 {"worst_gap", worst}};
  if (worst_pair.first) {
    rep.params["worst_L1"] = parts_json(worst_pair.first->parts());
    rep.params["worst_L2"] = parts_json(worst_pair.second->parts());
    rep.artifacts = {to_graph6(k2_join(*worst_pair.first, false)), to_graph6(k2_join(*worst_pair.second, false))};
  }
  return rep;
}

PathMergeSweep lemma2_sweep(int n, int k, int pair_sum, const VerifyOptions& opts) {
  if (pair_sum > n - 2) throw argument_error("n1 + n2 cannot exceed n-2");
  std::vector<PathMergeParams> points;
  const int rest = n - 2 - pair_sum;
  for (int n2 = k + 2; 2 * n2 <= pair_sum; ++n2) {
    PathMergeParams p{n, k, pair_sum - n2, n2, {}};
    if (rest > 0) p.rest = {rest};
    points.push_back(p);
  }
  if (points.empty()) throw argument_error("no (n1, n2) pair satisfies n1 >= n2 >= k+2");

  VerifyOptions inner = opts;
  inner.threads = 1;
  std::vector<VerificationReport> l2(points.size());
  std::vector<VerificationReport> c33(points.size());
  parallel_for(
      points.size(),
      [&](std::size_t i) {
        l2[i] = verify_lemma2(points[i], inner);
        c33[i] = verify_claim33(points[i], inner).report;
      },
      opts.threads);

  PathMergeSweep out;
  VerificationReport& s = out.summary;
  s.check_id = "lemma2_sweep";
  s.params["n"] = n;
  s.params["k"] = k;
  s.params["pair_sum"] = pair_sum;
  s.params["tol"] = opts.spectral.tol;
  s.dominating_edge = true;
  s.within_hypothesis = path_merge_threshold_met(n, k);
  double min_gap = std::numeric_limits<double>::infinity();
  double min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    s.tally(l2[i].holds);
    s.tally(c33[i].holds);
    min_gap = std::min(min_gap, l2[i].margin("gap"));
    min_slack = std::min(min_slack, c33[i].margin("min_interval_slack"));
    out.points.push_back(std::move(l2[i]));
    out.points.push_back(std::move(c33[i]));
  }
  s.holds = overall(s);
  s.margins = {{"points", static_cast<double>(points.size())},
               {"min_gap", min_gap},
               {"min_interval_slack", min_slack}};
  return out;
}

EntryBoundsSweep entry_bounds_sweep(int samples, std::uint64_t seed, int n_min, int n_max, const VerifyOptions& opts) {
  if (n_min < 4 || n_max < n_min || samples < 0) throw argument_error("invalid entry-bounds sweep range");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, LinearForest>> points;
  for (int s = 0; s < samples; ++s) {
    const int n = std::uniform_int_distribution<int>(n_min, n_max)(rng);
    const int total = n - 2;
    const int parts = std::uniform_int_distribution<int>(1, total)(rng);
    std::vector<int> cuts(static_cast<std::size_t>(total - 1));
    for (int i = 0; i < total - 1; ++i) cuts[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(static_cast<std::size_t>(parts - 1));
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> lengths;
    int prev = 0;
    for (int c : cuts) {
      lengths.push_back(c - prev);
      prev = c;
    }
    lengths.push_back(total - prev);
    points.emplace_back(n, LinearForest(lengths));
  }

  VerifyOptions inner = opts;
  inner.threads = 1;
  EntryBoundsSweep out;
  out.points.resize(points.size());
  parallel_for(
      points.size(), [&](std::size_t i) { out.points[i] = verify_entry_bounds(points[i].first, points[i].second, inner); },
      opts.threads);

  VerificationReport& s = out.summary;
  s.check_id = "entry_bounds_sweep";
  s.params["samples"] = samples;
  s.params["seed"] = seed;
  s.params["n_min"] = n_min;
  s.params["n_max"] = n_max;
  s.params["tol"] = opts.spectral.tol;
  s.dominating_edge = false;
  double lower = std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  for (const auto& p : out.points) {
    s.tally(p.holds);
    lower = std::min(lower, p.margin("min_lower_slack"));
    upper = std::min(upper, p.margin("min_upper_slack"));
  }
  s.holds = overall(s);
  s.margins = {{"min_lower_slack", lower}, {"min_upper_slack", upper}};
  return out;
}

Certainty revalidate(const VerificationReport& report, const SpectralOptions& opts) {
  const double tol = opts.tol;
  if (report.check_id == "lemma1" || report.check_id == "lemma2" || report.check_id == "lemma1_sweep") {
    if (report.artifacts.size() != 2) throw argument_error("comparison report needs two artifacts");
    const double smaller = spectral_radius(from_graph6(report.artifacts[0]), opts).rho;
    const double larger = spectral_radius(from_graph6(report.artifacts[1]), opts).rho;
    return certify_greater(larger, smaller, tol, tol);
  }
  if (report.check_id == "entry_bounds") {
    const Graph g = from_graph6(report.artifacts.at(0));
    const SpectralResult r = spectral_radius(g, opts);
    const double lo = 2.0 / r.rho;
    const double hi = lo + 8.0 / (r.rho * r.rho);
    Certainty c = Certainty::certified;
    for (Vertex v = kForestOffset; v < g.order(); ++v)
      c = combine(c, contained(r.x[static_cast<std::size_t>(v)], lo, hi, 10.0 * tol));
    c = combine(c, contained(r.x[kHubA], 1.0, 1.0, 10.0 * tol));
    return combine(c, contained(r.x[kHubB], 1.0, 1.0, 10.0 * tol));
  }
  if (report.check_id == "argmax") {
    const double rho = spectral_radius(from_graph6(report.artifacts.at(0)), opts).rho;
    if (std::fabs(rho - report.margin("rho_best")) > 10.0 * tol) return Certainty::violated;
    return report.holds;
  }
  throw argument_error("cannot revalidate report kind " + report.check_id);
}

}  // namespace spex
