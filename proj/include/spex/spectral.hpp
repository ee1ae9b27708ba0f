#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "spex/graph.hpp"
#include "spex/kernels.hpp"

namespace spex {

inline constexpr double kDefaultTol = 1e-12;

struct SpectralOptions {
  double tol = kDefaultTol;      // on ||A x - rho x||_inf with max(x) = 1
  long max_iters = 1'000'000;
  double shift = 1.0;            // iterate with A + shift*I; keeps bipartite graphs convergent
  const kernels::KernelTable* kernels = nullptr;  // nullptr: runtime-selected table
};

/// Spectral radius and Perron vector of a connected graph.
struct SpectralResult {
  double rho = 0.0;
  std::vector<double> x;  // positive, max entry exactly 1
  double residual = 0.0;
  long iters = 0;
};

/// Shifted power iteration from the all-ones vector, stopped as soon as the
/// infinity-norm residual of the max-normalised iterate is within tolerance.
/// rho is reported as the Rayleigh quotient of that iterate.
///
/// Throws argument_error for an empty or disconnected graph (take the max over
/// components instead), and convergence_error when the cap is reached.
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts = {});

/// max over connected components; 0 for edgeless graphs.
double spectral_radius_any(const Graph& g, const SpectralOptions& opts = {});

enum class FamilyKind { complete, cycle, complete_bipartite, path };

struct ClosedFormFamily {
  FamilyKind kind;
  int a = 1;
  int b = 1;  // second side for complete_bipartite only
};

/// K_n: n-1, C_n: 2, K_{a,b}: sqrt(ab), P_n: 2 cos(pi/(n+1)).
double closed_form_rho(const ClosedFormFamily& family);

/// x^T A x / x^T x. Throws argument_error on a size mismatch or zero vector.
double rayleigh_quotient(const Graph& g, std::span<const double> x,
                         const kernels::KernelTable& t = kernels::active_table());

struct SurgeryReport {
  double rho_before = 0.0;  // rho(G)
  double rayleigh = 0.0;    // Rayleigh quotient of A(G') at the Perron vector of G
  double rho_after = 0.0;   // rho(G'), max over components
  double margin = 0.0;      // rayleigh - rho_before
  double slack = 0.0;       // rho_after - rayleigh, never below -10*tol
  bool bound_holds = true;
};

/// Compares G' against G through the Perron vector of G. G must be connected;
/// both graphs must have the same order (argument_error otherwise).
SurgeryReport surgery_compare(const Graph& g, const Graph& gp, const SpectralOptions& opts = {});

enum class Certainty { certified, violated, indeterminate };

std::string_view to_string(Certainty c);

/// The claim larger > smaller is certified only if the gap exceeds
/// 10 * (tol_larger + tol_smaller); violated if it fails by the same amount.
Certainty certify_greater(double larger, double smaller, double tol_larger, double tol_smaller);

}  // namespace spex
