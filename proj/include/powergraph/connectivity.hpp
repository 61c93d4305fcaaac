#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powergraph/class_set.hpp"
#include "powergraph/graphcore.hpp"
#include "powergraph/numtheory.hpp"

namespace powergraph {

/// Closed-form evaluation was requested but no known formula covers n.
class NoClosedForm : public DomainError {
public:
  using DomainError::DomainError;
};

namespace connectivity {

using numtheory::Factorization;

inline constexpr std::size_t kDefaultNaiveCap = 500;

/// Which rule or solver produced a κ value. Closed-form tags are listed in
/// dispatch order.
enum class Method {
  CompleteGraph,
  TwoPrimes,
  NrAtLeast2MinAlphaBeta,
  R3MinAlphaBeta,
  SquarefreeMinAlphaGamma,
  SharpAlpha,
  QuotientExact,
  NaiveOracle,
};

std::string_view to_string(Method m);

struct Bounds {
  std::optional<Int> alpha;  // r >= 2
  std::optional<Int> beta;   // r >= 2
  std::optional<Int> gamma;  // r >= 3

  /// Smallest defined bound, if any.
  std::optional<Int> min() const;
};

Bounds compute_bounds(const Factorization& f);

struct KappaResult {
  Int n = 1;
  Int kappa = 0;
  Method method = Method::QuotientExact;
  /// Vertices whose removal disconnects P(C_n); absent for complete graphs.
  std::optional<std::vector<ClassCount>> witness;
  Bounds bounds;
};

/// κ from the known theorems, or nullopt in the undetermined region
/// (r >= 4, n_r = 1, not squarefree, 2φ(rad/p_r) < rad/p_r).
/// Throws DomainError for n < 2.
std::optional<KappaResult> kappa_closed_form(const Factorization& f);

/// Human-readable reason kappa_closed_form returned nullopt.
std::string open_region_message(const Factorization& f);

/// Exact κ via node-capacitated max-flow on the divisor quotient, one flow
/// per incomparable divisor pair. Throws DomainError for n < 2.
KappaResult kappa_quotient_exact(const Factorization& f);

/// Exact κ on the explicit vertex graph (vertex splitting plus Even's pair
/// enumeration); knows nothing about order classes. Throws CapExceeded when
/// n exceeds `cap`.
KappaResult kappa_naive(const graphcore::ExplicitGraph& g, std::size_t cap = kDefaultNaiveCap);

enum class SolveMethod { Auto, Closed, Quotient, Naive };

std::optional<SolveMethod> parse_solve_method(std::string_view s);

struct KappaOptions {
  std::size_t explicit_cap = graphcore::kDefaultExplicitCap;
  std::size_t naive_cap = kDefaultNaiveCap;
};

/// Auto uses the closed form when one applies and the quotient solver
/// otherwise. The result always carries the bounds, and κ is checked against
/// them (std::logic_error on violation). Closed throws NoClosedForm in the
/// open region.
KappaResult kappa(const Factorization& f, SolveMethod method, const KappaOptions& options = {});

/// Whether removing the witness from the explicit graph disconnects it and
/// the multiplicities sum to κ.
bool witness_disconnects(const graphcore::ExplicitGraph& g, const KappaResult& result);

}  // namespace connectivity
}  // namespace powergraph
