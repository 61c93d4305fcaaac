#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "powergraph/class_set.hpp"
#include "powergraph/numtheory.hpp"
#include "powergraph/simd/bitset_kernels.hpp"

namespace powergraph {

/// The requested explicit graph is larger than the configured vertex cap.
class CapExceeded : public DomainError {
public:
  using DomainError::DomainError;
};

namespace graphcore {

using numtheory::Factorization;

inline constexpr std::size_t kDefaultExplicitCap = 5000;
/// Adjacency rows are stored up to this many vertices and rebuilt per query above it.
inline constexpr std::size_t kMaterializeLimit = 1000;

/// Quotient of P(C_n) by order classes. Node d stands for the φ(d) elements
/// of order d; two nodes are adjacent iff one divides the other.
struct DivisorGraph {
  Int n = 1;
  std::vector<Int> nodes;   // ascending divisors
  std::vector<Int> weight;  // weight[i] = φ(nodes[i])
  std::vector<std::vector<std::size_t>> neighbors;

  std::size_t size() const noexcept { return nodes.size(); }
  /// Throws DomainError if d is not a node.
  std::size_t index_of(Int d) const;
  bool adjacent(std::size_t i, std::size_t j) const;
};

DivisorGraph build_divisor_graph(const Factorization& f);

struct RemovalResult {
  bool disconnected = false;
  /// Surviving nodes grouped by component, each ascending; components are
  /// ordered by their smallest divisor.
  std::vector<std::vector<Int>> components;
};

/// Connectivity of the quotient after deleting whole classes. Throws
/// DomainError if `removed` names a non-node or removes every node.
RemovalResult is_disconnected_after_removal(const DivisorGraph& g, const ClassSet& removed);

/// P(C_n) on residues 0..n-1 with order(k) = n / gcd(n, k).
class ExplicitGraph {
public:
  /// Throws CapExceeded when n > cap.
  ExplicitGraph(const Factorization& f, std::size_t cap = kDefaultExplicitCap);

  Int n() const noexcept { return n_; }
  std::size_t vertex_count() const noexcept { return static_cast<std::size_t>(n_); }
  std::size_t words() const noexcept { return words_; }
  Int order(std::size_t v) const { return order_[v]; }
  const std::vector<Int>& divisors() const noexcept { return divisors_; }

  bool adjacent(std::size_t x, std::size_t y) const;

  /// Open neighbourhood of v as a packed bitset of words() words.
  void row(std::size_t v, std::span<simd::Word> out) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const;

  /// Vertices of order d, packed.
  std::span<const simd::Word> class_mask(Int d) const;
  /// Vertices of order d, ascending.
  std::vector<std::size_t> class_members(Int d) const;

  /// Bitset with every vertex set.
  std::vector<simd::Word> all_vertices() const;

private:
  void build_row(std::size_t v, std::span<simd::Word> out) const;
  std::size_t class_index(Int d) const;

  Int n_ = 1;
  std::size_t words_ = 1;
  std::vector<Int> order_;
  std::vector<Int> divisors_;
  std::vector<std::size_t> class_of_;  // vertex -> index into divisors_
  std::vector<simd::Word> class_masks_;
  std::vector<simd::Word> rows_;  // empty when n > kMaterializeLimit
};

ExplicitGraph expand_explicit(const Factorization& f, std::size_t cap = kDefaultExplicitCap);

/// Connected components among the `alive` vertices (iterative frontier BFS
/// on packed rows). Components are ascending and ordered by first vertex.
std::vector<std::vector<std::size_t>> explicit_components(
    const ExplicitGraph& g, std::span<const simd::Word> alive,
    const simd::BitsetKernels& kernels = simd::active_kernels());

/// Alive mask after deleting whole classes.
std::vector<simd::Word> alive_without_classes(const ExplicitGraph& g, const ClassSet& removed);

/// Alive mask after deleting, for each entry, the first `count` residues of
/// order `divisor`. Throws DomainError if a count exceeds the class size.
std::vector<simd::Word> alive_without(const ExplicitGraph& g, std::span<const ClassCount> removed);

/// True when the alive vertices split into at least two components.
bool explicit_disconnected(const ExplicitGraph& g, std::span<const simd::Word> alive);

}  // namespace graphcore
}  // namespace powergraph
