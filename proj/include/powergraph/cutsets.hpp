#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powergraph/class_set.hpp"
#include "powergraph/graphcore.hpp"
#include "powergraph/numtheory.hpp"

namespace powergraph::cutsets {

using numtheory::Factorization;

// Prime indices below are 1-based (j in 1..r), matching the ordering
// p_1 < p_2 < ... < p_r of the factorization.

/// |Y_j| = φ(n) + (n/rad)·(rad/p_j − φ(rad/p_j)). Requires r >= 2.
Int alpha_j(const Factorization& f, std::size_t j);

/// |Z_j| = φ(n) + (n/rad)·p_j^{1−n_j}·(rad/p_j + φ(rad/p_j)·(p_j^{n_j−1} − 2)).
/// Requires r >= 2.
Int beta_j(const Factorization& f, std::size_t j);

/// |X_{a,b}|. Requires r >= 3 and a != b.
Int gamma_ab(const Factorization& f, std::size_t a, std::size_t b);

/// α(n) = α_r, β(n) = β_r, γ(n) = γ_{r−1,r}.
Int alpha(const Factorization& f);
Int beta(const Factorization& f);
Int gamma(const Factorization& f);

/// E_n plus the subgroups S_{n/(p_j p_t)}, t != j.
ClassSet build_Y(const Factorization& f, std::size_t j);

/// E_n, the classes E_{n/p_j^s} for 1 <= s < n_j, and the subgroups
/// S_{n/(p_j^{n_j} p_t)}, t != j. Equal to build_Y when n_j = 1.
ClassSet build_Z(const Factorization& f, std::size_t j);

/// The subgroups S_{n/(p_i p_a p_b)} for i outside {a,b}, E_n, and the
/// classes E_{n/p_a^s}, E_{n/p_b^s} for s >= 1 up to the full exponent.
ClassSet build_X(const Factorization& f, std::size_t a, std::size_t b);

struct CutKind {
  enum class Family { Y, Z, X };
  Family family = Family::Y;
  std::size_t first = 1;   // j for Y/Z, a for X
  std::size_t second = 0;  // b for X

  static CutKind Y(std::size_t j) { return {Family::Y, j, 0}; }
  static CutKind Z(std::size_t j) { return {Family::Z, j, 0}; }
  static CutKind X(std::size_t a, std::size_t b) { return {Family::X, a, b}; }

  std::string label() const;
  friend bool operator==(const CutKind&, const CutKind&) = default;
};

ClassSet build(const Factorization& f, const CutKind& kind);

/// A partition of the surviving classes into two sides with no comparable
/// divisor pair across.
struct Separation {
  Int n = 1;
  std::vector<Int> side_a;
  std::vector<Int> side_b;
};

/// The separation certifying that build(f, kind) is a cut-set, found by
/// classifying surviving divisors by their exponent pattern (no search).
/// Throws std::logic_error if a side comes out empty or a survivor fits
/// neither pattern.
Separation separation_of(const Factorization& f, const CutKind& kind);

/// True when sides are non-empty, disjoint, mutually incomparable and
/// together with `cut` cover every divisor.
bool is_valid_separation(const Factorization& f, const Separation& s, const ClassSet& cut);

/// Closed form for |⋃_{a∈aset} S_{n/(p_a·Π_{b∈bset} p_b)}|:
/// (n/rad)·(rad/Π_b p_b − Π_c p_c·φ(Π_a p_a)), c ranging over the rest.
Int union_subgroups_size(const Factorization& f, const std::vector<std::size_t>& aset,
                         const std::vector<std::size_t>& bset);

struct CutVerdict {
  bool is_cut = false;
  std::vector<std::vector<Int>> components;
};

/// Removes the classes from the quotient graph and reports the components.
/// Requires a proper non-empty subset of the divisors.
CutVerdict verify_cutset(const Factorization& f, const ClassSet& x);

/// Exact test of (2 + (p_r−2)/(p_{r−1}−1))·φ(P) >= P, P = p_1⋯p_{r−2},
/// which holds iff α(n) <= γ(n). Requires r >= 3.
bool alpha_le_gamma_criterion(const Factorization& f);

/// Which of the comparison lemmas hold for this n. Only meaningful for r >= 3.
struct OrderingReport {
  bool alpha_strictly_decreasing = true;      // α_1 > ... > α_r
  bool alpha_beta_trichotomy = true;          // sign(α_j − β_j) per exponent and 2φ test
  bool beta_descent = true;                   // 2φ(rad/p_j) < rad/p_j, j<k ⇒ β_j > β_k
  bool beta_below_gamma = true;               // n_r >= 2 ⇒ β < γ (vacuous otherwise)
  bool alpha_gamma_criterion_matches = true;  // criterion ⇔ α <= γ
  bool gamma_minimal_at_last_pair = true;     // γ_{a,b} > γ_{r−1,r} otherwise

  bool all() const noexcept {
    return alpha_strictly_decreasing && alpha_beta_trichotomy && beta_descent &&
           beta_below_gamma && alpha_gamma_criterion_matches && gamma_minimal_at_last_pair;
  }
};

OrderingReport check_orderings(const Factorization& f);

}  // namespace powergraph::cutsets
