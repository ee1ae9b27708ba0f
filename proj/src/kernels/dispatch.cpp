#include <cstdlib>
#include <string_view>

#include "spex/kernels.hpp"

namespace spex::kernels {

#ifdef SPEX_HAVE_AVX2
extern const KernelTable kAvx2Table;
#endif

const KernelTable* avx2_table() {
#ifdef SPEX_HAVE_AVX2
  static const bool usable = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return usable ? &kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_table() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* env = std::getenv("SPEX_KERNEL");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_table();
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

void adjacency_multiply(std::span<const std::int32_t> offsets, std::span<const std::int32_t> targets,
                        std::span<const double> x, std::span<double> y, const KernelTable& t) {
  t.adjacency_multiply(offsets.data(), targets.data(), x.size(), x.data(), y.data());
}

double dot(std::span<const double> a, std::span<const double> b, const KernelTable& t) {
  return t.dot(a.data(), b.data(), a.size());
}

}  // namespace spex::kernels
