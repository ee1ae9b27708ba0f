#include <cmath>

#include "spex/kernels.hpp"

namespace spex::kernels {

namespace {

void adjacency_multiply_scalar(const std::int32_t* offsets, const std::int32_t* targets, std::size_t n,
                               const double* x, double* y) {
  for (std::size_t v = 0; v < n; ++v) {
    double acc = 0.0;
    for (std::int32_t k = offsets[v]; k < offsets[v + 1]; ++k) acc += x[targets[k]];
    y[v] = acc;
  }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double residual_inf_scalar(const double* ax, const double* x, double lambda, std::size_t n) {
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::fmax(worst, std::fabs(ax[i] - lambda * x[i]));
  return worst;
}

double shift_combine_scalar(const double* ax, const double* x, double shift, double* out, std::size_t n) {
  double top = -HUGE_VAL;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = ax[i] + shift * x[i];
    top = std::fmax(top, out[i]);
  }
  return top;
}

void divide_scalar(double* x, double d, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] /= d;
}

constexpr KernelTable kScalar{
    "scalar", adjacency_multiply_scalar, dot_scalar, residual_inf_scalar, shift_combine_scalar, divide_scalar,
};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace spex::kernels
