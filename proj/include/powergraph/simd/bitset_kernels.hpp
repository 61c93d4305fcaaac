#pragma once

// Word-parallel kernels over packed vertex bitsets (64 vertices per word).
// The explicit power graph stores adjacency rows and class masks in this
// form; frontier expansion in BFS is a sequence of these calls.
//
// Every kernel has a scalar reference implementation. Vector variants must
// produce bit-identical output and are selected once at runtime.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace powergraph::simd {

using Word = std::uint64_t;

struct BitsetKernels {
  std::string_view name;
  /// dst |= src
  void (*or_into)(Word* dst, const Word* src, std::size_t words);
  /// out = candidates & allowed & ~visited; returns whether out is non-zero.
  bool (*mask_new)(Word* out, const Word* candidates, const Word* allowed, const Word* visited,
                   std::size_t words);
  /// Number of set bits.
  std::size_t (*popcount)(const Word* src, std::size_t words);
  /// Number of bits set in both a and b.
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
};

const BitsetKernels& scalar_kernels();

/// nullptr when the binary or the CPU lacks AVX2.
const BitsetKernels* avx2_kernels();

/// Kernel set used by the library: AVX2 if available, else scalar.
/// The environment variable POWERGRAPH_SIMD=scalar forces the reference path.
const BitsetKernels& active_kernels();

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline void set_bit(std::span<Word> bits, std::size_t i) { bits[i >> 6] |= Word{1} << (i & 63); }
inline void clear_bit(std::span<Word> bits, std::size_t i) {
  bits[i >> 6] &= ~(Word{1} << (i & 63));
}
inline bool test_bit(std::span<const Word> bits, std::size_t i) {
  return (bits[i >> 6] >> (i & 63)) & 1U;
}

}  // namespace powergraph::simd
