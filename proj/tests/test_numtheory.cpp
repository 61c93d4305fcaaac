#include <doctest.h>

#include <limits>

#include "oracles.hpp"
#include "powergraph/numtheory.hpp"

using namespace powergraph;
using namespace powergraph::numtheory;

TEST_CASE("factorize examples") {
  const auto one = factorize(1);
  CHECK(one.primes.empty());
  CHECK(one.exponents.empty());
  CHECK(one.value == 1);

  const auto twelve = factorize(12);
  CHECK(twelve.primes == std::vector<Int>{2, 3});
  CHECK(twelve.exponents == std::vector<int>{2, 1});

  const auto f2310 = factorize(2310);
  CHECK(f2310.primes == std::vector<Int>{2, 3, 5, 7, 11});
  CHECK(f2310.exponents == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(f2310.is_squarefree());

  CHECK_THROWS_AS(factorize(0), DomainError);
  CHECK_THROWS_AS(factorize(-5), DomainError);
}

TEST_CASE("factorize agrees with trial-division oracle") {
  for (Int n = 1; n <= 5000; ++n) {
    const auto f = factorize(n);
    const auto expected = oracle::trial_factor(n);
    REQUIRE(f.primes.size() == expected.size());
    std::size_t i = 0;
    Int product = 1;
    for (auto [p, e] : expected) {
      CHECK(f.primes[i] == p);
      CHECK(f.exponents[i] == e);
      CHECK(is_prime(p));
      product *= checked_pow(p, e);
      ++i;
    }
    CHECK(product == n);
  }
  // Large prime and a large semiprime near the 64-bit range.
  CHECK(factorize(1000000007).primes == std::vector<Int>{1000000007});
  const auto big = factorize(Int{1000000007} * 999999937);
  CHECK(big.primes == std::vector<Int>{999999937, 1000000007});
}

TEST_CASE("phi examples and gcd-count oracle") {
  CHECK(phi(factorize(1)) == 1);
  CHECK(phi(factorize(12)) == 4);
  CHECK(phi(factorize(30)) == 8);
  for (Int n = 1; n <= 600; ++n) CHECK(phi(n) == oracle::gcd_count_phi(n));
}

TEST_CASE("divisors examples and exhaustive scan") {
  CHECK(divisors(factorize(1)) == std::vector<Int>{1});
  CHECK(divisors(factorize(12)) == std::vector<Int>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(factorize(30)) == std::vector<Int>{1, 2, 3, 5, 6, 10, 15, 30});
  for (Int n = 1; n <= 2000; ++n) {
    const auto f = factorize(n);
    const auto d = divisors(f);
    CHECK(d == oracle::scan_divisors(n));
    std::size_t tau = 1;
    for (int e : f.exponents) tau *= static_cast<std::size_t>(e + 1);
    CHECK(d.size() == tau);
  }
}

TEST_CASE("radical examples") {
  CHECK(radical(factorize(1)) == 1);
  CHECK(radical(factorize(12)) == 6);
  CHECK(radical(factorize(300)) == 30);
}

TEST_CASE("phi_of_divisor matches phi of the divisor") {
  const auto f = factorize(720);
  for (Int d : divisors(f)) CHECK(phi_of_divisor(f, d) == phi(d));
  CHECK_THROWS_AS(phi_of_divisor(f, 7), DomainError);
}

TEST_CASE("totient doubling test") {
  const std::vector<Int> p35{3, 5};
  const std::vector<Int> p23{2, 3};
  const std::vector<Int> p2{2};
  CHECK(totient_doubling_test(p35) == TotientComparison::Greater);
  CHECK(totient_doubling_test(p23) == TotientComparison::Less);
  CHECK_THROWS_AS(totient_doubling_test(p2), TotientEqualityError);
  CHECK_THROWS_AS(totient_doubling_test(std::vector<Int>{}), DomainError);
  CHECK_THROWS_AS(totient_doubling_test(std::vector<Int>{3, 3}), DomainError);
  CHECK_THROWS_AS(totient_doubling_test(std::vector<Int>{4}), DomainError);
}

TEST_CASE("checked arithmetic reports overflow") {
  constexpr Int big = std::numeric_limits<Int>::max();
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), OverflowError);
  CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked_sub(std::numeric_limits<Int>::min(), 1), OverflowError);
  CHECK_THROWS_AS(checked_pow(10, 19), OverflowError);
  CHECK(checked_pow(10, 18) == 1000000000000000000);
  CHECK_THROWS_AS(exact_div(7, 2), std::logic_error);
  CHECK(exact_div(12, 4) == 3);
}

TEST_CASE("property: divisor sum of phi is n") {
  for (Int n = 1; n <= 10000; ++n) {
    const auto f = factorize(n);
    Int total = 0;
    for (Int d : divisors(f)) total += phi_of_divisor(f, d);
    REQUIRE(total == n);
  }
}

TEST_CASE("property: phi is multiplicative on coprime pairs") {
  std::vector<Int> table(1001);
  for (Int a = 1; a <= 1000; ++a) table[static_cast<std::size_t>(a)] = phi(a);
  for (Int a = 1; a <= 1000; ++a) {
    for (Int b = a; b <= 1000; ++b) {
      if (std::gcd(a, b) != 1) continue;
      REQUIRE(phi(a * b) ==
              table[static_cast<std::size_t>(a)] * table[static_cast<std::size_t>(b)]);
    }
  }
}

namespace {

// All non-empty subsets of `pool`, each ascending.
std::vector<std::vector<Int>> subsets(const std::vector<Int>& pool) {
  std::vector<std::vector<Int>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << pool.size()); ++mask) {
    std::vector<Int> s;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (std::size_t{1} << i)) s.push_back(pool[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Int product(const std::vector<Int>& v) {
  Int p = 1;
  for (Int x : v) p *= x;
  return p;
}

}  // namespace

TEST_CASE("property: q*phi(P) >= P for q >= t+1 with the two equality cases") {
  const auto primes = oracle::first_primes(8);
  for (const auto& s : subsets(primes)) {
    const Int t = static_cast<Int>(s.size());
    const Int P = product(s);
    const Int phiP = phi(P);
    for (Int q = t + 1; q <= t + 4; ++q) {
      CHECK(q * phiP >= P);
      const bool equality_case =
          (t == 1 && s[0] == 2 && q == 2) || (t == 2 && s[0] == 2 && s[1] == 3 && q == 3);
      CHECK((q * phiP == P) == equality_case);
    }
  }
}

TEST_CASE("property: phi(m/p_i) >= p_k^{m_k-1} phi(m/p_k^{m_k}) and phi(m/p_i) >= phi(m/p_k)") {
  for (Int m = 2; m <= 100000; ++m) {
    const auto f = factorize(m);
    const std::size_t t = f.r();
    if (t < 2) continue;
    for (std::size_t k = 2; k <= t; ++k) {
      const Int pk = f.prime(k);
      const int mk = f.exponent(k);
      const Int pk_full = checked_pow(pk, mk);
      const Int rhs2 = checked_pow(pk, mk - 1) * phi(m / pk_full);
      const Int phi_m_over_pk = phi(m / pk);
      for (std::size_t i = 1; i < k; ++i) {
        const Int lhs = phi(m / f.prime(i));
        REQUIRE(lhs >= rhs2);
        const bool exception2 = k == 2 && f.prime(1) == 2 && f.prime(2) == 3 && f.exponent(1) >= 2;
        CHECK((lhs == rhs2) == exception2);

        REQUIRE(lhs >= phi_m_over_pk);
        const bool exception11 = k == 2 && f.prime(1) == 2 && f.prime(2) == 3 &&
                                 f.exponent(1) >= 2 && f.exponent(2) == 1;
        CHECK((lhs == phi_m_over_pk) == exception11);
      }
    }
  }
}

TEST_CASE("property: P_S - phi(P_S) is minimised by the initial segment of the same size") {
  const auto primes = oracle::first_primes(8);
  for (const auto& s : subsets(primes)) {
    const std::size_t k = s.size();
    const std::vector<Int> initial(primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(k));
    const Int lhs = product(s) - phi(product(s));
    const Int rhs = product(initial) - phi(product(initial));
    CHECK(lhs >= rhs);
    CHECK((lhs == rhs) == (k == 1 || s == initial));
  }
}
