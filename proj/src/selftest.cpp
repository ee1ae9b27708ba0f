#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "spex/cli.hpp"
#include "spex/constructions.hpp"
#include "spex/cycles.hpp"
#include "spex/error.hpp"
#include "spex/planarity.hpp"
#include "spex/spectral.hpp"
#include "spex/verify.hpp"

namespace spex::cli {

namespace {

struct Check {
  const char* name;
  std::function<bool()> body;
};

template <class Fn>
bool throws_argument_error(Fn&& fn) {
  try {
    fn();
  } catch (const argument_error&) {
    return true;
  }
  return false;
}

bool near(double a, double b, double eps = 1e-10) { return std::fabs(a - b) <= eps; }

std::vector<Check> checks() {
  return {
      {"from_edges K2", [] { return Graph::from_edges(2, {{0, 1}}).size() == 1; }},
      {"from_edges P3 degrees",
       [] {
         const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
         return g.degree(0) == 1 && g.degree(1) == 2 && g.degree(2) == 1;
       }},
      {"from_edges C4 2-regular",
       [] {
         const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
         for (Vertex v = 0; v < 4; ++v)
           if (g.degree(v) != 2) return false;
         return true;
       }},
      {"union P2 P1", [] { const Graph g = disjoint_union(path_graph(2), path_graph(1)); return g.order() == 3 && g.size() == 1; }},
      {"union P3 P3", [] { const Graph g = disjoint_union(path_graph(3), path_graph(3)); return g.order() == 6 && g.size() == 4; }},
      {"union C3 C3",
       [] {
         const Graph g = disjoint_union(cycle_graph(3), cycle_graph(3));
         return g.order() == 6 && g.size() == 6 && g.components().size() == 2;
       }},
      {"join K2 2K1", [] { const Graph g = join(complete_graph(2), empty_graph(2)); return g.order() == 4 && g.size() == 5; }},
      {"join 2K1 8K1", [] { return join(empty_graph(2), empty_graph(8)).size() == 16; }},
      {"join K2 (P4 u 2P1)", [] { return join(complete_graph(2), build_linear_forest({4, 1, 1})).size() == 16; }},
      {"K4 planar", [] { return is_planar(complete_graph(4)); }},
      {"K5 not planar", [] { return !is_planar(complete_graph(5)); }},
      {"K4 e(X) tight",
       [] {
         const auto r = planar_bounds_check(complete_graph(4), {{0, 1, 2, 3}, {}});
         return r.edges_inside_x == 6 && r.bound_inside_x == 6 && r.holds;
       }},
      {"K2,8 e(X,Y) tight",
       [] {
         const auto r = planar_bounds_check(complete_bipartite(2, 8), {{0, 1}, {2, 3, 4, 5, 6, 7, 8, 9}});
         return r.edges_between == 16 && r.bound_between == 16 && r.holds;
       }},
      {"C6 e(X)", [] { const auto r = planar_bounds_check(cycle_graph(6), {{0, 1, 2, 3, 4, 5}, {}}); return r.edges_inside_x == 6 && r.holds; }},
      {"forest [3] = P3", [] { return build_linear_forest({3}) == path_graph(3); }},
      {"forest [2,2]", [] { const Graph g = build_linear_forest({2, 2}); return g.order() == 4 && g.size() == 2; }},
      {"k2_join [1] = K3", [] { return k2_join(LinearForest({1}), true) == complete_graph(3); }},
      {"extremal(13,1) parts", [] { return extremal_forest(13, 1).parts() == std::vector<int>{7, 2, 2}; }},
      {"extremal(20,2) size",
       [] { const auto f = extremal_forest(20, 2); return f.size() == 15 && extremal_graph(20, 2).order() == 20; }},
      {"L(6,0) = {[4]}", [] { const auto all = enumerate_lna(6, 0); return all.size() == 1 && all[0].parts() == std::vector<int>{4}; }},
      {"rho C5 = 2", [] { return near(spectral_radius(cycle_graph(5)).rho, 2.0); }},
      {"closed form C100 = 2", [] { return closed_form_rho({FamilyKind::cycle, 100}) == 2.0; }},
      {"Rayleigh K2 ones = 1", [] { const std::vector<double> x{1, 1}; return near(rayleigh_quotient(complete_graph(2), x), 1.0); }},
      {"Rayleigh C4 ones = 2", [] { const std::vector<double> x{1, 1, 1, 1}; return near(rayleigh_quotient(cycle_graph(4), x), 2.0); }},
      {"identity surgery C6", [] { const auto r = surgery_compare(cycle_graph(6), cycle_graph(6)); return near(r.margin, 0.0) && r.bound_holds; }},
      {"C5 has a 5-cycle", [] { return find_cycle(cycle_graph(5), 5).status == CycleStatus::present; }},
      {"C5 has no 4-cycle", [] { return find_cycle(cycle_graph(5), 4).status == CycleStatus::absent; }},
      {"triangle in k2+[4,1,1]",
       [] {
         const auto c = join_cycle_certificate(LinearForest({4, 1, 1}), 3);
         return c && is_valid_cycle(k2_join(LinearForest({4, 1, 1})), *c, 3);
       }},
      {"K4 spectrum {3,4}", [] { return cycle_spectrum(complete_graph(4), 4).present_lengths() == std::vector<int>{3, 4}; }},
      {"C6 in G(6,0), witness 3", [] { const auto m = in_gnk(cycle_graph(6), 0); return m.member() && m.witness == 3; }},
      {"lemma1 rejects a2 = a1",
       [] {
         return throws_argument_error(
             [] { verify_lemma1(40, 2, 2, LinearForest({34, 2, 2}), LinearForest({35, 2, 1})); });
       }},
      {"lemma2 rejects n < 259",
       [] { return throws_argument_error([] { verify_lemma2({100, 0, 49, 49, {}}); }); }},
      {"argmax rejects n < 259", [] { return throws_argument_error([] { argmax_sweep(100, 0, 3); }); }},
  };
}

}  // namespace

int run_selftest(std::ostream& out) {
  int failures = 0;
  for (const auto& c : checks()) {
    bool ok = false;
    try {
      ok = c.body();
    } catch (const std::exception&) {
      ok = false;
    }
    out << (ok ? "ok   " : "FAIL ") << c.name << '\n';
    failures += ok ? 0 : 1;
  }
  return failures;
}

}  // namespace spex::cli
