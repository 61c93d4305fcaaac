#include "powergraph/cutsets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace powergraph::cutsets {

using numtheory::checked_add;
using numtheory::checked_mul;
using numtheory::checked_pow;
using numtheory::checked_sub;
using numtheory::exact_div;

namespace {

void require_r(const Factorization& f, std::size_t min_r, const char* what) {
  if (f.r() < min_r) {
    throw DomainError(std::string(what) + " needs at least " + std::to_string(min_r) +
                      " distinct prime factors; n=" + std::to_string(f.value) + " has " +
                      std::to_string(f.r()));
  }
}

void require_index(const Factorization& f, std::size_t j) {
  if (j < 1 || j > f.r()) {
    throw DomainError("prime index " + std::to_string(j) + " out of range 1.." +
                      std::to_string(f.r()));
  }
}

void require_pair(const Factorization& f, std::size_t a, std::size_t b) {
  require_index(f, a);
  require_index(f, b);
  if (a == b) throw DomainError("prime indices must differ");
}

// φ of a squarefree product of some of f's primes.
Int phi_squarefree(Int m, const Factorization& f) {
  Int out = 1;
  for (Int p : f.primes) {
    if (m % p == 0) out = checked_mul(out, p - 1);
  }
  return out;
}

bool divides(Int d, Int m) { return m % d == 0; }

}  // namespace

Int alpha_j(const Factorization& f, std::size_t j) {
  require_r(f, 2, "alpha_j");
  require_index(f, j);
  const Int rad = numtheory::radical(f);
  const Int q = rad / f.prime(j);
  const Int bracket = checked_sub(q, phi_squarefree(q, f));
  return checked_add(numtheory::phi(f), checked_mul(f.value / rad, bracket));
}

Int beta_j(const Factorization& f, std::size_t j) {
  require_r(f, 2, "beta_j");
  require_index(f, j);
  const Int rad = numtheory::radical(f);
  const Int q = rad / f.prime(j);
  const Int pe = checked_pow(f.prime(j), f.exponent(j) - 1);
  const Int bracket = checked_add(q, checked_mul(phi_squarefree(q, f), pe - 2));
  const Int tail = exact_div(checked_mul(f.value / rad, bracket), pe);
  return checked_add(numtheory::phi(f), tail);
}

Int gamma_ab(const Factorization& f, std::size_t a, std::size_t b) {
  require_r(f, 3, "gamma_ab");
  require_pair(f, a, b);
  const Int rad = numtheory::radical(f);
  const Int qa = rad / f.prime(a);
  const Int qb = rad / f.prime(b);
  const Int qab = qa / f.prime(b);
  Int bracket = checked_add(phi_squarefree(qa, f), phi_squarefree(qb, f));
  bracket = checked_add(bracket, checked_sub(qab, phi_squarefree(qab, f)));
  return checked_add(numtheory::phi(f), checked_mul(f.value / rad, bracket));
}

Int alpha(const Factorization& f) { return alpha_j(f, f.r()); }
Int beta(const Factorization& f) { return beta_j(f, f.r()); }
Int gamma(const Factorization& f) {
  require_r(f, 3, "gamma");
  return gamma_ab(f, f.r() - 1, f.r());
}

ClassSet build_Y(const Factorization& f, std::size_t j) {
  require_r(f, 2, "build_Y");
  require_index(f, j);
  const Int n = f.value;
  std::vector<Int> subgroup_orders;
  for (std::size_t t = 1; t <= f.r(); ++t) {
    if (t != j) subgroup_orders.push_back(n / (f.prime(j) * f.prime(t)));
  }
  std::vector<Int> members{n};
  for (Int d : numtheory::divisors(f)) {
    if (std::any_of(subgroup_orders.begin(), subgroup_orders.end(),
                    [d](Int m) { return divides(d, m); })) {
      members.push_back(d);
    }
  }
  return ClassSet(n, std::move(members));
}

ClassSet build_Z(const Factorization& f, std::size_t j) {
  require_r(f, 2, "build_Z");
  require_index(f, j);
  const Int n = f.value;
  const Int pj = f.prime(j);
  const Int pj_full = checked_pow(pj, f.exponent(j));
  std::vector<Int> members{n};
  Int pk = 1;
  for (int s = 1; s < f.exponent(j); ++s) {
    pk *= pj;
    members.push_back(n / pk);
  }
  std::vector<Int> subgroup_orders;
  for (std::size_t t = 1; t <= f.r(); ++t) {
    if (t != j) subgroup_orders.push_back(n / (pj_full * f.prime(t)));
  }
  for (Int d : numtheory::divisors(f)) {
    if (std::any_of(subgroup_orders.begin(), subgroup_orders.end(),
                    [d](Int m) { return divides(d, m); })) {
      members.push_back(d);
    }
  }
  return ClassSet(n, std::move(members));
}

ClassSet build_X(const Factorization& f, std::size_t a, std::size_t b) {
  require_r(f, 3, "build_X");
  require_pair(f, a, b);
  const Int n = f.value;
  const Int pa = f.prime(a);
  const Int pb = f.prime(b);
  std::vector<Int> members{n};
  for (std::size_t idx : {a, b}) {
    Int pk = 1;
    for (int s = 1; s <= f.exponent(idx); ++s) {
      pk *= f.prime(idx);
      members.push_back(n / pk);
    }
  }
  std::vector<Int> subgroup_orders;
  for (std::size_t i = 1; i <= f.r(); ++i) {
    if (i != a && i != b) subgroup_orders.push_back(n / (f.prime(i) * pa * pb));
  }
  for (Int d : numtheory::divisors(f)) {
    if (std::any_of(subgroup_orders.begin(), subgroup_orders.end(),
                    [d](Int m) { return divides(d, m); })) {
      members.push_back(d);
    }
  }
  return ClassSet(n, std::move(members));
}

std::string CutKind::label() const {
  switch (family) {
    case Family::Y: return "Y:" + std::to_string(first);
    case Family::Z: return "Z:" + std::to_string(first);
    case Family::X: return "X:" + std::to_string(first) + "," + std::to_string(second);
  }
  return "?";
}

ClassSet build(const Factorization& f, const CutKind& kind) {
  switch (kind.family) {
    case CutKind::Family::Y: return build_Y(f, kind.first);
    case CutKind::Family::Z: return build_Z(f, kind.first);
    case CutKind::Family::X: return build_X(f, kind.first, kind.second);
  }
  throw std::logic_error("unknown cut family");
}

Separation separation_of(const Factorization& f, const CutKind& kind) {
  const ClassSet cut = build(f, kind);
  Separation sep;
  sep.n = f.value;
  const std::size_t r = f.r();

  // full[i]: whether the exponent of p_{i+1} in d is maximal.
  auto classify = [&](Int d) -> int {
    const std::vector<int> v = f.valuation(d);
    auto full = [&](std::size_t i1) { return v[i1 - 1] == f.exponent(i1); };
    auto others_full = [&](std::size_t skip1, std::size_t skip2) {
      for (std::size_t i = 1; i <= r; ++i) {
        if (i != skip1 && i != skip2 && !full(i)) return false;
      }
      return true;
    };
    switch (kind.family) {
      case CutKind::Family::Y: {
        const std::size_t j = kind.first;
        if (!full(j) && others_full(j, j)) return 0;  // (n/p_j^{n_j})·p_j^s, s < n_j
        if (full(j) && !others_full(j, j)) return 1;
        break;
      }
      case CutKind::Family::Z: {
        const std::size_t j = kind.first;
        if (v[j - 1] == 0 && others_full(j, j)) return 0;  // exactly n/p_j^{n_j}
        if (v[j - 1] >= 1 && !others_full(j, j)) return 1;
        break;
      }
      case CutKind::Family::X: {
        const std::size_t a = kind.first;
        const std::size_t b = kind.second;
        const bool low = !full(a) && !full(b);
        if (low && others_full(a, b)) return 0;
        if (!low && !others_full(a, b)) return 1;
        break;
      }
    }
    return -1;
  };

  for (Int d : numtheory::divisors(f)) {
    if (cut.contains(d)) continue;
    switch (classify(d)) {
      case 0: sep.side_a.push_back(d); break;
      case 1: sep.side_b.push_back(d); break;
      default:
        throw std::logic_error("divisor " + std::to_string(d) + " survives " + kind.label() +
                               " but matches neither side's exponent pattern");
    }
  }
  if (sep.side_a.empty() || sep.side_b.empty()) {
    throw std::logic_error("separation for " + kind.label() + " has an empty side");
  }
  return sep;
}

bool is_valid_separation(const Factorization& f, const Separation& s, const ClassSet& cut) {
  if (s.side_a.empty() || s.side_b.empty()) return false;
  for (Int a : s.side_a) {
    for (Int b : s.side_b) {
      if (a == b || a % b == 0 || b % a == 0) return false;
    }
  }
  std::set<Int> covered(cut.members().begin(), cut.members().end());
  std::size_t expected = cut.members().size() + s.side_a.size() + s.side_b.size();
  covered.insert(s.side_a.begin(), s.side_a.end());
  covered.insert(s.side_b.begin(), s.side_b.end());
  const auto all = numtheory::divisors(f);
  return covered.size() == expected && covered == std::set<Int>(all.begin(), all.end());
}

Int union_subgroups_size(const Factorization& f, const std::vector<std::size_t>& aset,
                         const std::vector<std::size_t>& bset) {
  require_r(f, 2, "union_subgroups_size");
  if (aset.empty() || bset.empty()) throw DomainError("index sets must be non-empty");
  std::set<std::size_t> seen;
  for (std::size_t i : aset) {
    require_index(f, i);
    if (!seen.insert(i).second) throw DomainError("repeated or overlapping prime index");
  }
  for (std::size_t i : bset) {
    require_index(f, i);
    if (!seen.insert(i).second) throw DomainError("repeated or overlapping prime index");
  }
  const Int rad = numtheory::radical(f);
  Int prod_a = 1;
  Int prod_b = 1;
  Int prod_c = 1;
  for (std::size_t i = 1; i <= f.r(); ++i) {
    if (std::find(aset.begin(), aset.end(), i) != aset.end()) {
      prod_a = checked_mul(prod_a, f.prime(i));
    } else if (std::find(bset.begin(), bset.end(), i) != bset.end()) {
      prod_b = checked_mul(prod_b, f.prime(i));
    } else {
      prod_c = checked_mul(prod_c, f.prime(i));
    }
  }
  const Int bracket = checked_sub(rad / prod_b, checked_mul(prod_c, phi_squarefree(prod_a, f)));
  return checked_mul(f.value / rad, bracket);
}

CutVerdict verify_cutset(const Factorization& f, const ClassSet& x) {
  if (x.n() != f.value) throw DomainError("class set belongs to a different n");
  const auto g = graphcore::build_divisor_graph(f);
  if (x.empty() || x.members().size() >= g.size()) {
    throw DomainError("cut candidate must be a proper non-empty subset of the divisors");
  }
  const auto removal = graphcore::is_disconnected_after_removal(g, x);
  return CutVerdict{removal.disconnected, removal.components};
}

bool alpha_le_gamma_criterion(const Factorization& f) {
  require_r(f, 3, "alpha_le_gamma_criterion");
  const std::size_t r = f.r();
  Int head = 1;
  Int head_phi = 1;
  for (std::size_t i = 1; i + 2 <= r; ++i) {
    head = checked_mul(head, f.prime(i));
    head_phi = checked_mul(head_phi, f.prime(i) - 1);
  }
  const Int p_prev = f.prime(r - 1);
  const Int p_last = f.prime(r);
  // (2 + (p_r − 2)/(p_{r−1} − 1))·φ(P) >= P, multiplied through by p_{r−1} − 1 > 0.
  const Int lhs = checked_mul(checked_add(checked_mul(2, p_prev - 1), p_last - 2), head_phi);
  const Int rhs = checked_mul(head, p_prev - 1);
  return lhs >= rhs;
}

OrderingReport check_orderings(const Factorization& f) {
  require_r(f, 3, "check_orderings");
  OrderingReport rep;
  const std::size_t r = f.r();
  const Int rad = numtheory::radical(f);

  std::vector<Int> al(r + 1);
  std::vector<Int> be(r + 1);
  for (std::size_t j = 1; j <= r; ++j) {
    al[j] = alpha_j(f, j);
    be[j] = beta_j(f, j);
  }
  auto sign = [](Int x) { return (x > 0) - (x < 0); };
  auto doubling_short = [&](std::size_t j) {
    const Int q = rad / f.prime(j);
    return 2 * phi_squarefree(q, f) < q;
  };

  for (std::size_t j = 1; j < r; ++j) {
    if (!(al[j] > al[j + 1])) rep.alpha_strictly_decreasing = false;
  }

  for (std::size_t j = 1; j <= r; ++j) {
    const Int q = rad / f.prime(j);
    const int expected = f.exponent(j) == 1 ? 0 : sign(q - 2 * phi_squarefree(q, f));
    if (sign(al[j] - be[j]) != expected) rep.alpha_beta_trichotomy = false;
  }

  for (std::size_t j = 1; j <= r; ++j) {
    if (!doubling_short(j)) continue;
    for (std::size_t k = j + 1; k <= r; ++k) {
      if (!(be[j] > be[k])) rep.beta_descent = false;
    }
  }

  const Int g = gamma(f);
  if (f.exponent(r) >= 2 && !(be[r] < g)) rep.beta_below_gamma = false;
  if (alpha_le_gamma_criterion(f) != (al[r] <= g)) rep.alpha_gamma_criterion_matches = false;

  for (std::size_t a = 1; a <= r; ++a) {
    for (std::size_t b = a + 1; b <= r; ++b) {
      if (a == r - 1 && b == r) continue;
      if (!(gamma_ab(f, a, b) > g)) rep.gamma_minimal_at_last_pair = false;
    }
  }
  return rep;
}

}  // namespace powergraph::cutsets
