#include "spex/cycles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "spex/error.hpp"
#include "spex/parallel.hpp"
#include "spex/planarity.hpp"

namespace spex {

std::string_view to_string(CycleStatus s) {
  switch (s) {
    case CycleStatus::present:
      return "present";
    case CycleStatus::absent:
      return "absent";
    case CycleStatus::budget:
      return "budget";
  }
  return "budget";
}

bool is_valid_cycle(const Graph& g, std::span<const Vertex> cycle, int ell) {
  if (ell < 3 || cycle.size() != static_cast<std::size_t>(ell)) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex v = cycle[i];
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
    if (!g.has_edge(v, cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

namespace {

class CycleSearcher {
 public:
  CycleSearcher(const Graph& g, int ell, long budget)
      : g_(g), ell_(ell), budget_(budget), visited_(static_cast<std::size_t>(g.order()), 0),
        dist_(static_cast<std::size_t>(g.order()), -1) {}

  CycleSearch run() {
    CycleSearch out;
    for (Vertex s = 0; s < g_.order(); ++s) {
      int usable = 0;
      for (Vertex w : g_.neighbors(s)) usable += w > s;
      if (usable < 2 || g_.order() - s < ell_) continue;
      root_ = s;
      path_.assign(1, s);
      visited_[s] = 1;
      const bool found = extend(s);
      visited_[s] = 0;
      if (exhausted_) {
        out.status = CycleStatus::budget;
        out.nodes = nodes_;
        return out;
      }
      if (found) {
        out.status = CycleStatus::present;
        out.cycle = path_;
        out.nodes = nodes_;
        return out;
      }
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  bool allowed(Vertex w) const { return w > root_ && !visited_[w]; }

  // BFS over unvisited vertices above the root: enough of them must be
  // reachable, and a neighbour of the root must lie within `remaining` steps.
  bool feasible(Vertex from, int remaining) {
    queue_.clear();
    touched_.clear();
    queue_.push_back(from);
    dist_[from] = 0;
    touched_.push_back(from);
    int reachable = 0;
    bool closes = false;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex v = queue_[head];
      for (Vertex w : g_.neighbors(v)) {
        if (!allowed(w) || dist_[w] >= 0) continue;
        dist_[w] = dist_[v] + 1;
        touched_.push_back(w);
        queue_.push_back(w);
        ++reachable;
        if (!closes && dist_[w] <= remaining && g_.has_edge(w, root_)) closes = true;
      }
    }
    for (Vertex v : touched_) dist_[v] = -1;
    return closes && reachable >= remaining;
  }

  bool extend(Vertex v) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const int len = static_cast<int>(path_.size());
    if (len == ell_) return g_.has_edge(v, root_) && path_[1] < v;
    const int remaining = ell_ - len;
    if (remaining >= 2 && len > 1 && !feasible(v, remaining)) return false;
    for (Vertex w : g_.neighbors(v)) {
      if (!allowed(w)) continue;
      if (remaining == 1 && !(g_.has_edge(w, root_) && path_[1] < w)) continue;
      visited_[w] = 1;
      path_.push_back(w);
      if (extend(w)) return true;
      path_.pop_back();
      visited_[w] = 0;
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  int ell_;
  long budget_;
  long nodes_ = 0;
  bool exhausted_ = false;
  Vertex root_ = 0;
  std::vector<Vertex> path_;
  std::vector<char> visited_;
  std::vector<int> dist_;
  std::vector<Vertex> queue_;
  std::vector<Vertex> touched_;
};

}  // namespace

CycleSearch find_cycle(const Graph& g, int ell, long budget) {
  if (ell < 3 || ell > g.order()) {
    throw argument_error("cycle length " + std::to_string(ell) + " outside [3, " + std::to_string(g.order()) + "]");
  }
  return CycleSearcher(g, ell, budget).run();
}

int JoinStructure::order() const {
  int n = 2;
  for (const auto& p : paths) n += static_cast<int>(p.size());
  return n;
}

int JoinStructure::longest_cycle() const {
  if (paths.empty()) return 0;
  const int n1 = static_cast<int>(paths[0].size());
  const int n2 = paths.size() > 1 ? static_cast<int>(paths[1].size()) : 0;
  if (dominating_edge) return n1 + n2 + 2;
  if (n2 > 0) return n1 + n2 + 2;
  return n1 >= 2 ? n1 + 2 : 0;
}

bool JoinStructure::has_cycle(int ell) const {
  if (ell < 3 || ell > longest_cycle()) return false;
  if (dominating_edge || ell >= 4) return true;
  return paths[0].size() >= 2;
}

JoinStructure join_structure(const LinearForest& forest, bool dominating_edge) {
  JoinStructure js;
  js.dominating_edge = dominating_edge;
  Vertex at = kForestOffset;
  for (int p : forest.parts()) {
    std::vector<Vertex> path(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) path[static_cast<std::size_t>(i)] = at + i;
    js.paths.push_back(std::move(path));
    at += p;
  }
  return js;
}

std::optional<JoinStructure> recognize_join(const Graph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) hubs.push_back(v);
  if (hubs.size() != 2) return std::nullopt;

  JoinStructure js;
  js.hub_a = hubs[0];
  js.hub_b = hubs[1];
  js.dominating_edge = true;
  auto is_hub = [&](Vertex v) { return v == js.hub_a || v == js.hub_b; };
  auto forest_degree = [&](Vertex v) { return g.degree(v) - 2; };

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int covered = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (is_hub(v) || seen[v]) continue;
    if (forest_degree(v) > 2) return std::nullopt;
    if (forest_degree(v) == 2) continue;  // interior vertices are reached from an endpoint
    std::vector<Vertex> path{v};
    seen[v] = 1;
    Vertex prev = -1;
    Vertex cur = v;
    for (;;) {
      Vertex next = -1;
      for (Vertex w : g.neighbors(cur))
        if (!is_hub(w) && w != prev) next = w;
      if (next < 0) break;
      if (seen[next] || forest_degree(next) > 2) return std::nullopt;
      seen[next] = 1;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    covered += static_cast<int>(path.size());
    js.paths.push_back(std::move(path));
  }
  // Anything left over lies on a cycle of the remainder.
  if (covered != n - 2) return std::nullopt;
  std::stable_sort(js.paths.begin(), js.paths.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return js;
}

std::optional<std::vector<Vertex>> join_cycle_certificate(const JoinStructure& js, int ell) {
  if (ell < 3) throw argument_error("cycle length must be at least 3");
  if (!js.has_cycle(ell)) return std::nullopt;
  const auto& p = js.paths[0];
  const int n1 = static_cast<int>(p.size());
  const int n2 = js.paths.size() > 1 ? static_cast<int>(js.paths[1].size()) : 0;

  std::vector<Vertex> cycle;
  auto take = [&](const std::vector<Vertex>& path, int from, int count) {
    for (int i = 0; i < count; ++i) cycle.push_back(path[static_cast<std::size_t>(from + i)]);
  };

  if (js.dominating_edge) {
    // u' p1..pa u'' q1..qb, closing through u'u'' when b = 0.
    const int a = std::min(n1, ell - 2);
    const int b = ell - 2 - a;
    cycle.push_back(js.hub_a);
    take(p, 0, a);
    cycle.push_back(js.hub_b);
    if (b > 0) take(js.paths[1], 0, b);
    return cycle;
  }
  if (ell == 3) {
    cycle = {js.hub_a, p[0], p[1]};
    return cycle;
  }
  cycle.push_back(js.hub_a);
  if (n2 > 0) {
    const int a = std::min(n1, ell - 3);
    take(p, 0, a);
    cycle.push_back(js.hub_b);
    take(js.paths[1], 0, ell - 2 - a);
  } else {
    // One path split into two disjoint stretches.
    take(p, 0, 1);
    cycle.push_back(js.hub_b);
    take(p, 1, ell - 3);
  }
  return cycle;
}

std::optional<std::vector<Vertex>> join_cycle_certificate(const LinearForest& forest, int ell,
                                                          bool dominating_edge) {
  return join_cycle_certificate(join_structure(forest, dominating_edge), ell);
}

std::vector<int> CycleSpectrum::present_lengths() const {
  std::vector<int> out;
  for (int ell = 3; ell <= ell_max; ++ell)
    if (present(ell)) out.push_back(ell);
  return out;
}

CycleSpectrum cycle_spectrum(const Graph& g, int ell_max, const SpectrumOptions& opts) {
  if (ell_max > g.order()) throw argument_error("ell_max exceeds the graph order");
  CycleSpectrum sp;
  sp.n = g.order();
  sp.ell_max = ell_max;
  const auto slots = static_cast<std::size_t>(std::max(ell_max, 2) + 1);
  sp.status.assign(slots, CycleStatus::absent);
  sp.certificates.assign(slots, {});

  std::optional<JoinStructure> js;
  if (opts.use_fast_path) js = recognize_join(g);
  sp.fast_path = js.has_value();

  const int lengths = std::max(0, ell_max - 2);
  parallel_for(
      static_cast<std::size_t>(lengths),
      [&](std::size_t i) {
        const int ell = static_cast<int>(i) + 3;
        const auto at = static_cast<std::size_t>(ell);
        if (js) {
          auto cert = join_cycle_certificate(*js, ell);
          if (cert && !is_valid_cycle(g, *cert, ell)) throw std::logic_error("join certificate failed validation");
          sp.status[at] = cert ? CycleStatus::present : CycleStatus::absent;
          if (cert) sp.certificates[at] = std::move(*cert);
          if (!opts.cross_check) return;
          const CycleSearch exact = find_cycle(g, ell, opts.budget);
          if (exact.status != CycleStatus::budget && exact.status != sp.status[at]) {
            throw std::logic_error("fast path and exact search disagree at length " + std::to_string(ell));
          }
          return;
        }
        CycleSearch exact = find_cycle(g, ell, opts.budget);
        sp.status[at] = exact.status;
        sp.certificates[at] = std::move(exact.cycle);
      },
      opts.threads);
  return sp;
}

Membership in_gnk(const Graph& g, int k, const SpectrumOptions& opts) {
  const int n = g.order();
  if (k < 0 || k > n - 3) throw argument_error("k must lie in [0, n-3]");
  if (!is_planar(g)) throw argument_error("G(n,k) is defined over planar graphs; input is not planar");
  const CycleSpectrum sp = cycle_spectrum(g, n - k, opts);
  Membership m;
  for (int ell = 3; ell <= n - k; ++ell) {
    const CycleStatus s = sp.status[static_cast<std::size_t>(ell)];
    if (s == CycleStatus::absent) {
      m.status = MembershipStatus::member;
      m.witness = ell;
      return m;
    }
    if (s == CycleStatus::budget) {
      m.status = MembershipStatus::undetermined;
      return m;
    }
  }
  return m;
}

}  // namespace spex
