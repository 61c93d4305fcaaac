#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powergraph/connectivity.hpp"

namespace powergraph::sweep {

/// One n of a range sweep, reconciling the closed form, the quotient solver
/// and (below the oracle cap) the explicit-graph oracle.
struct SweepRow {
  Int n = 0;
  std::size_t r = 0;
  std::vector<int> exponents;
  std::optional<Int> alpha;
  std::optional<Int> beta;
  std::optional<Int> gamma;
  Int kappa = 0;
  connectivity::Method method = connectivity::Method::QuotientExact;
  std::optional<bool> ok_closed;  // closed form == quotient, when a closed form applies
  std::optional<bool> ok_naive;   // naive == quotient, when the oracle ran

  bool ok() const { return ok_closed.value_or(true) && ok_naive.value_or(true); }
};

struct SweepOptions {
  Int lo = 2;
  Int hi = 2;
  std::size_t oracle_cap = 200;
  std::size_t jobs = 1;
  std::size_t explicit_cap = graphcore::kDefaultExplicitCap;
};

SweepRow compute_row(Int n, const SweepOptions& options);

/// Rows for lo..hi in ascending n; identical for any job count.
/// Throws DomainError unless 2 <= lo <= hi.
std::vector<SweepRow> run_sweep(const SweepOptions& options);

std::string tsv_header();
std::string to_tsv(const SweepRow& row);
std::string to_jsonl(const SweepRow& row);

}  // namespace powergraph::sweep
