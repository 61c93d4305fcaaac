#include <cstdlib>
#include <string_view>

#include "powergraph/simd/bitset_kernels.hpp"

namespace powergraph::simd {

#if defined(POWERGRAPH_HAVE_AVX2_TU)
const BitsetKernels& avx2_kernels_impl();
#endif

const BitsetKernels* avx2_kernels() {
#if defined(POWERGRAPH_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &avx2_kernels_impl() : nullptr;
#else
  return nullptr;
#endif
}

const BitsetKernels& active_kernels() {
  static const BitsetKernels& chosen = []() -> const BitsetKernels& {
    const char* env = std::getenv("POWERGRAPH_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const BitsetKernels* k = avx2_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace powergraph::simd
