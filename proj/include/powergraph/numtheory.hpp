#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace powergraph {

/// Input outside the domain an operation is defined on (n = 0, bad index, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An intermediate product or sum left the signed 64-bit range.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

namespace numtheory {

using Int = std::int64_t;

// Checked arithmetic. These throw OverflowError instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_pow(Int base, int exponent);

/// a / b, throwing std::logic_error when b does not divide a. Used where the
/// algebra guarantees exactness, so a remainder means an implementation bug.
Int exact_div(Int a, Int b);

bool is_prime(Int n);

/// Prime-power decomposition n = p_1^{n_1} ... p_r^{n_r} with p_1 < ... < p_r.
/// n = 1 has empty lists.
struct Factorization {
  std::vector<Int> primes;
  std::vector<int> exponents;
  Int value = 1;

  std::size_t r() const noexcept { return primes.size(); }
  bool is_squarefree() const noexcept;
  bool is_prime_power() const noexcept { return primes.size() == 1; }

  /// Exponent of p_i for 1-based index i.
  int exponent(std::size_t i) const { return exponents.at(i - 1); }
  Int prime(std::size_t i) const { return primes.at(i - 1); }

  /// Multiplicity of each prime of this factorization in d (d need not divide value).
  std::vector<int> valuation(Int d) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Deterministic trial division. Throws DomainError for n < 1.
Factorization factorize(Int n);

/// Euler's totient, multiplicative over prime powers.
Int phi(const Factorization& f);
Int phi(Int n);

/// φ(d) for a divisor d of f.value, computed from f's primes without
/// refactoring d. Throws DomainError if d does not divide f.value.
Int phi_of_divisor(const Factorization& f, Int d);

/// All divisors in ascending order; there are Π(n_i + 1) of them.
std::vector<Int> divisors(const Factorization& f);

/// Product of the distinct primes; 1 for n = 1.
Int radical(const Factorization& f);

enum class TotientComparison { Less, Greater };

/// 2·φ(P) = P for the single prime 2 and nothing else; callers must treat it
/// as outside the domain rather than pick a side.
class TotientEqualityError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Compares 2·φ(p_1 ⋯ p_k) with p_1 ⋯ p_k for distinct primes.
TotientComparison totient_doubling_test(std::span<const Int> primes);

std::string to_string(TotientComparison c);

}  // namespace numtheory
}  // namespace powergraph
