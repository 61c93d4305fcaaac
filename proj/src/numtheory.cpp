#include "powergraph/numtheory.hpp"

#include <algorithm>
#include <set>

namespace powergraph::numtheory {

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in addition: " + std::to_string(a) + " + " +
                        std::to_string(b));
  }
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in subtraction: " + std::to_string(a) + " - " +
                        std::to_string(b));
  }
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in product: " + std::to_string(a) + " * " +
                        std::to_string(b));
  }
  return out;
}

Int checked_pow(Int base, int exponent) {
  if (exponent < 0) throw DomainError("negative exponent");
  Int out = 1;
  for (int i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

Int exact_div(Int a, Int b) {
  if (b == 0 || a % b != 0) {
    throw std::logic_error("non-exact division " + std::to_string(a) + " / " +
                           std::to_string(b));
  }
  return a / b;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool Factorization::is_squarefree() const noexcept {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 1; });
}

std::vector<int> Factorization::valuation(Int d) const {
  std::vector<int> v(primes.size(), 0);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    while (d != 0 && d % primes[i] == 0) {
      d /= primes[i];
      ++v[i];
    }
  }
  return v;
}

Factorization factorize(Int n) {
  if (n < 1) throw DomainError("factorize: n must be >= 1, got " + std::to_string(n));
  Factorization f;
  f.value = n;
  Int m = n;
  for (Int p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.primes.push_back(p);
    f.exponents.push_back(e);
  }
  if (m > 1) {
    f.primes.push_back(m);
    f.exponents.push_back(1);
  }
  return f;
}

Int phi(const Factorization& f) {
  Int out = 1;
  for (std::size_t i = 0; i < f.primes.size(); ++i) {
    out = checked_mul(out, checked_mul(checked_pow(f.primes[i], f.exponents[i] - 1),
                                       f.primes[i] - 1));
  }
  return out;
}

Int phi(Int n) { return phi(factorize(n)); }

Int phi_of_divisor(const Factorization& f, Int d) {
  if (d < 1 || f.value % d != 0) {
    throw DomainError(std::to_string(d) + " does not divide " + std::to_string(f.value));
  }
  Int out = 1;
  for (std::size_t i = 0; i < f.primes.size(); ++i) {
    const Int p = f.primes[i];
    if (d % p != 0) continue;
    Int pk = 1;
    while (d % p == 0) {
      d /= p;
      pk *= p;
    }
    out = checked_mul(out, (pk / p) * (p - 1));
  }
  return out;
}

std::vector<Int> divisors(const Factorization& f) {
  std::vector<Int> out{1};
  for (std::size_t i = 0; i < f.primes.size(); ++i) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (int e = 1; e <= f.exponents[i]; ++e) {
      pk *= f.primes[i];
      for (std::size_t k = 0; k < base; ++k) out.push_back(out[k] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int radical(const Factorization& f) {
  Int out = 1;
  for (Int p : f.primes) out = checked_mul(out, p);
  return out;
}

TotientComparison totient_doubling_test(std::span<const Int> primes) {
  if (primes.empty()) throw DomainError("totient_doubling_test: empty prime list");
  std::set<Int> seen;
  Int product = 1;
  Int totient = 1;
  for (Int p : primes) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (!seen.insert(p).second) throw DomainError("repeated prime " + std::to_string(p));
    product = checked_mul(product, p);
    totient = checked_mul(totient, p - 1);
  }
  const Int doubled = checked_mul(2, totient);
  if (doubled == product) {
    throw TotientEqualityError("2*phi(P) == P (only possible for P = 2)");
  }
  return doubled > product ? TotientComparison::Greater : TotientComparison::Less;
}

std::string to_string(TotientComparison c) {
  return c == TotientComparison::Greater ? "GREATER" : "LESS";
}

}  // namespace powergraph::numtheory
