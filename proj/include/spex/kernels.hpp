#pragma once

// Arithmetic inner loops of the spectral engine.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2/FMA
// variant. The variant is chosen once at runtime from CPUID; the environment
// variable SPEX_KERNEL=scalar|avx2 overrides the choice. Variants agree up to
// floating-point reassociation, which the kernel tests pin down.

#include <cstddef>
#include <cstdint>
#include <span>

namespace spex::kernels {

struct KernelTable {
  const char* name;
  // y = A x for the CSR adjacency (offsets has n+1 entries).
  void (*adjacency_multiply)(const std::int32_t* offsets, const std::int32_t* targets, std::size_t n,
                             const double* x, double* y);
  double (*dot)(const double* a, const double* b, std::size_t n);
  // max_i |ax_i - lambda * x_i|
  double (*residual_inf)(const double* ax, const double* x, double lambda, std::size_t n);
  // out_i = ax_i + shift * x_i, returns max_i out_i. `out` may alias `x`.
  double (*shift_combine)(const double* ax, const double* x, double shift, double* out, std::size_t n);
  // x_i /= d
  void (*divide)(double* x, double d, std::size_t n);
};

const KernelTable& scalar_table();
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table();
/// Table used by the spectral engine.
const KernelTable& active_table();

// Span conveniences over the active table.
void adjacency_multiply(std::span<const std::int32_t> offsets, std::span<const std::int32_t> targets,
                        std::span<const double> x, std::span<double> y, const KernelTable& t = active_table());
double dot(std::span<const double> a, std::span<const double> b, const KernelTable& t = active_table());

}  // namespace spex::kernels
