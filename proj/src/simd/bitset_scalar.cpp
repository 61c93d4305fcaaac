#include <bit>

#include "powergraph/simd/bitset_kernels.hpp"

namespace powergraph::simd {
namespace {

void or_into_scalar(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

bool mask_new_scalar(Word* out, const Word* candidates, const Word* allowed, const Word* visited,
                     std::size_t words) {
  Word any = 0;
  for (std::size_t i = 0; i < words; ++i) {
    out[i] = candidates[i] & allowed[i] & ~visited[i];
    any |= out[i];
  }
  return any != 0;
}

std::size_t popcount_scalar(const Word* src, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(src[i]));
  return total;
}

std::size_t and_popcount_scalar(const Word* a, const Word* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) {
    total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  }
  return total;
}

}  // namespace

const BitsetKernels& scalar_kernels() {
  static const BitsetKernels k{"scalar", or_into_scalar, mask_new_scalar, popcount_scalar,
                                 and_popcount_scalar};
  return k;
}

}  // namespace powergraph::simd
