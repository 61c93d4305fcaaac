#pragma once

#include <initializer_list>
#include <vector>

#include "powergraph/numtheory.hpp"

namespace powergraph {

using numtheory::Int;

/// A vertex subset of P(C_n) that is a union of whole order classes E_d,
/// stored as the divisors d. Members are kept ascending and unique.
class ClassSet {
public:
  ClassSet() = default;
  /// Throws DomainError if some member does not divide n.
  ClassSet(Int n, std::vector<Int> members);
  ClassSet(Int n, std::initializer_list<Int> members)
      : ClassSet(n, std::vector<Int>(members)) {}

  Int n() const noexcept { return n_; }
  const std::vector<Int>& members() const noexcept { return members_; }
  bool contains(Int d) const;
  bool empty() const noexcept { return members_.empty(); }

  /// Number of group elements: Σ φ(d) over members.
  Int cardinality() const;
  Int cardinality(const numtheory::Factorization& f) const;

  friend bool operator==(const ClassSet&, const ClassSet&) = default;

private:
  Int n_ = 1;
  std::vector<Int> members_;
};

/// `count` vertices taken from class E_d; count == φ(d) means the whole class.
struct ClassCount {
  Int divisor = 0;
  Int count = 0;
  friend bool operator==(const ClassCount&, const ClassCount&) = default;
};

}  // namespace powergraph
