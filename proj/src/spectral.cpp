#include "spex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spex/error.hpp"

namespace spex {

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts) {
  const int n = g.order();
  if (n == 0) throw argument_error("spectral radius of the empty graph");
  if (!(opts.tol > 0.0)) throw argument_error("tolerance must be positive");
  if (!g.is_connected()) throw argument_error("graph is disconnected; compute per component");

  const kernels::KernelTable& t = opts.kernels ? *opts.kernels : kernels::active_table();
  const auto offsets = g.csr_offsets();
  const auto targets = g.csr_targets();
  const auto len = static_cast<std::size_t>(n);

  SpectralResult r;
  r.x.assign(len, 1.0);
  std::vector<double> ax(len);
  double residual = HUGE_VAL;
  for (long it = 1; it <= opts.max_iters; ++it) {
    t.adjacency_multiply(offsets.data(), targets.data(), len, r.x.data(), ax.data());
    const double lambda = t.dot(r.x.data(), ax.data(), len) / t.dot(r.x.data(), r.x.data(), len);
    residual = t.residual_inf(ax.data(), r.x.data(), lambda, len);
    if (residual <= opts.tol) {
      r.rho = lambda;
      r.residual = residual;
      r.iters = it;
      return r;
    }
    const double top = t.shift_combine(ax.data(), r.x.data(), opts.shift, r.x.data(), len);
    t.divide(r.x.data(), top, len);
  }
  throw convergence_error("power iteration did not reach tol " + std::to_string(opts.tol) + " in " +
                              std::to_string(opts.max_iters) + " iterations (residual " +
                              std::to_string(residual) + ")",
                          residual, opts.max_iters);
}

double spectral_radius_any(const Graph& g, const SpectralOptions& opts) {
  double best = 0.0;
  for (const auto& comp : g.components()) {
    if (comp.size() < 2) continue;
    best = std::max(best, spectral_radius(g.induced(comp), opts).rho);
  }
  return best;
}

double closed_form_rho(const ClosedFormFamily& f) {
  if (f.a < 1 || f.b < 1) throw argument_error("family parameters must be at least 1");
  switch (f.kind) {
    case FamilyKind::complete:
      return f.a - 1.0;
    case FamilyKind::cycle:
      if (f.a < 3) throw argument_error("cycle needs at least 3 vertices");
      return 2.0;
    case FamilyKind::complete_bipartite:
      return std::sqrt(static_cast<double>(f.a) * f.b);
    case FamilyKind::path:
      return 2.0 * std::cos(std::numbers::pi / (f.a + 1));
  }
  return 0.0;
}

double rayleigh_quotient(const Graph& g, std::span<const double> x, const kernels::KernelTable& t) {
  if (x.size() != static_cast<std::size_t>(g.order())) throw argument_error("vector length differs from graph order");
  const double norm = t.dot(x.data(), x.data(), x.size());
  if (!(norm > 0.0)) throw argument_error("Rayleigh quotient of a zero vector");
  std::vector<double> ax(x.size());
  t.adjacency_multiply(g.csr_offsets().data(), g.csr_targets().data(), x.size(), x.data(), ax.data());
  return t.dot(x.data(), ax.data(), x.size()) / norm;
}

SurgeryReport surgery_compare(const Graph& g, const Graph& gp, const SpectralOptions& opts) {
  if (g.order() != gp.order()) throw argument_error("surgery needs graphs of equal order");
  const kernels::KernelTable& t = opts.kernels ? *opts.kernels : kernels::active_table();
  const SpectralResult base = spectral_radius(g, opts);
  SurgeryReport r;
  r.rho_before = base.rho;
  r.rayleigh = rayleigh_quotient(gp, base.x, t);
  r.rho_after = spectral_radius_any(gp, opts);
  r.margin = r.rayleigh - r.rho_before;
  r.slack = r.rho_after - r.rayleigh;
  r.bound_holds = r.slack >= -10.0 * opts.tol;
  return r;
}

std::string_view to_string(Certainty c) {
  switch (c) {
    case Certainty::certified:
      return "certified";
    case Certainty::violated:
      return "violated";
    case Certainty::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

Certainty certify_greater(double larger, double smaller, double tol_larger, double tol_smaller) {
  const double margin = 10.0 * (tol_larger + tol_smaller);
  const double gap = larger - smaller;
  if (gap > margin) return Certainty::certified;
  if (gap < -margin) return Certainty::violated;
  return Certainty::indeterminate;
}

}  // namespace spex
