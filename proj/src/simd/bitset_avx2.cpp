// Compiled with -mavx2 -mpopcnt; only reachable through bitset_dispatch.cpp
// after a CPUID check.

#include <immintrin.h>

#include "powergraph/simd/bitset_kernels.hpp"

namespace powergraph::simd {
namespace {

void or_into_avx2(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(a, b));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

bool mask_new_avx2(Word* out, const Word* candidates, const Word* allowed, const Word* visited,
                   std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(candidates + i));
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(allowed + i));
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(visited + i));
    // andnot(v, x) = ~v & x
    const __m256i r = _mm256_andnot_si256(v, _mm256_and_si256(c, a));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
    acc = _mm256_or_si256(acc, r);
  }
  Word tail = 0;
  for (; i < words; ++i) {
    out[i] = candidates[i] & allowed[i] & ~visited[i];
    tail |= out[i];
  }
  return tail != 0 || !_mm256_testz_si256(acc, acc);
}

std::size_t popcount_avx2(const Word* src, std::size_t words) {
  // No AVX2 vector popcount; four independent hardware popcnt chains.
  std::size_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    c0 += static_cast<std::size_t>(_mm_popcnt_u64(src[i]));
    c1 += static_cast<std::size_t>(_mm_popcnt_u64(src[i + 1]));
    c2 += static_cast<std::size_t>(_mm_popcnt_u64(src[i + 2]));
    c3 += static_cast<std::size_t>(_mm_popcnt_u64(src[i + 3]));
  }
  for (; i < words; ++i) c0 += static_cast<std::size_t>(_mm_popcnt_u64(src[i]));
  return c0 + c1 + c2 + c3;
}

std::size_t and_popcount_avx2(const Word* a, const Word* b, std::size_t words) {
  std::size_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i x = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                       _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
    c0 += static_cast<std::size_t>(_mm_popcnt_u64(static_cast<Word>(_mm256_extract_epi64(x, 0))));
    c1 += static_cast<std::size_t>(_mm_popcnt_u64(static_cast<Word>(_mm256_extract_epi64(x, 1))));
    c2 += static_cast<std::size_t>(_mm_popcnt_u64(static_cast<Word>(_mm256_extract_epi64(x, 2))));
    c3 += static_cast<std::size_t>(_mm_popcnt_u64(static_cast<Word>(_mm256_extract_epi64(x, 3))));
  }
  for (; i < words; ++i) c0 += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
  return c0 + c1 + c2 + c3;
}

}  // namespace

const BitsetKernels& avx2_kernels_impl() {
  static const BitsetKernels k{"avx2", or_into_avx2, mask_new_avx2, popcount_avx2,
                               and_popcount_avx2};
  return k;
}

}  // namespace powergraph::simd
