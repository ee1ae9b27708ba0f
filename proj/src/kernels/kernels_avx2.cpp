// Compiled with -mavx2 -mfma; only reached after a CPUID check.

#include <immintrin.h>

#include <cmath>

#include "spex/kernels.hpp"

namespace spex::kernels {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(m, _mm_unpackhi_pd(m, m)));
}

void adjacency_multiply_avx2(const std::int32_t* offsets, const std::int32_t* targets, std::size_t n,
                             const double* x, double* y) {
  for (std::size_t v = 0; v < n; ++v) {
    std::int32_t k = offsets[v];
    const std::int32_t end = offsets[v + 1];
    double acc = 0.0;
    if (end - k >= 4) {
      __m256d vacc = _mm256_setzero_pd();
      for (; k + 4 <= end; k += 4) {
        const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(targets + k));
        vacc = _mm256_add_pd(vacc, _mm256_i32gather_pd(x, idx, 8));
      }
      acc = hsum(vacc);
    }
    for (; k < end; ++k) acc += x[targets[k]];
    y[v] = acc;
  }
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double residual_inf_avx2(const double* ax, const double* x, double lambda, std::size_t n) {
  const __m256d vl = _mm256_set1_pd(lambda);
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d worst = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_fnmadd_pd(vl, _mm256_loadu_pd(x + i), _mm256_loadu_pd(ax + i));
    worst = _mm256_max_pd(worst, _mm256_andnot_pd(sign, r));
  }
  double w = hmax(worst);
  for (; i < n; ++i) w = std::fmax(w, std::fabs(ax[i] - lambda * x[i]));
  return w;
}

double shift_combine_avx2(const double* ax, const double* x, double shift, double* out, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(shift);
  __m256d top = _mm256_set1_pd(-HUGE_VAL);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_fmadd_pd(vs, _mm256_loadu_pd(x + i), _mm256_loadu_pd(ax + i));
    _mm256_storeu_pd(out + i, r);
    top = _mm256_max_pd(top, r);
  }
  double t = hmax(top);
  for (; i < n; ++i) {
    out[i] = std::fma(shift, x[i], ax[i]);
    t = std::fmax(t, out[i]);
  }
  return t;
}

void divide_avx2(double* x, double d, std::size_t n) {
  const __m256d vd = _mm256_set1_pd(d);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(x + i, _mm256_div_pd(_mm256_loadu_pd(x + i), vd));
  for (; i < n; ++i) x[i] /= d;
}

}  // namespace

extern const KernelTable kAvx2Table;
const KernelTable kAvx2Table{
    "avx2", adjacency_multiply_avx2, dot_avx2, residual_inf_avx2, shift_combine_avx2, divide_avx2,
};

}  // namespace spex::kernels
