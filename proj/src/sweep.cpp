#include "powergraph/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "powergraph/json_io.hpp"

namespace powergraph::sweep {

SweepRow compute_row(Int n, const SweepOptions& options) {
  const auto f = numtheory::factorize(n);
  SweepRow row;
  row.n = n;
  row.r = f.r();
  row.exponents = f.exponents;

  const auto closed = connectivity::kappa_closed_form(f);
  const auto quotient = connectivity::kappa_quotient_exact(f);
  row.alpha = quotient.bounds.alpha;
  row.beta = quotient.bounds.beta;
  row.gamma = quotient.bounds.gamma;
  if (closed) {
    row.kappa = closed->kappa;
    row.method = closed->method;
    row.ok_closed = closed->kappa == quotient.kappa;
  } else {
    row.kappa = quotient.kappa;
    row.method = quotient.method;
  }

  const std::size_t cap = std::min(options.oracle_cap, options.explicit_cap);
  if (static_cast<std::size_t>(n) <= cap) {
    const auto g = graphcore::expand_explicit(f, options.explicit_cap);
    row.ok_naive = connectivity::kappa_naive(g, cap).kappa == quotient.kappa;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepOptions& options) {
  if (options.lo < 2 || options.lo > options.hi) {
    throw DomainError("sweep range must satisfy 2 <= lo <= hi, got " + std::to_string(options.lo) +
                      ".." + std::to_string(options.hi));
  }
  const std::size_t count = static_cast<std::size_t>(options.hi - options.lo + 1);
  std::vector<SweepRow> rows(count);
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, count);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        rows[i] = compute_row(options.lo + static_cast<Int>(i), options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

namespace {

std::string opt_int(const std::optional<Int>& v) { return v ? std::to_string(*v) : "NA"; }
std::string opt_bool(const std::optional<bool>& v) {
  if (!v) return "NA";
  return *v ? "true" : "false";
}

std::string join_exponents(const std::vector<int>& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string tsv_header() {
  return "n\tr\texps\talpha\tbeta\tgamma\tkappa\tmethod\tok_closed\tok_naive";
}

std::string to_tsv(const SweepRow& row) {
  std::string out;
  out += std::to_string(row.n) + '\t';
  out += std::to_string(row.r) + '\t';
  out += join_exponents(row.exponents) + '\t';
  out += opt_int(row.alpha) + '\t';
  out += opt_int(row.beta) + '\t';
  out += opt_int(row.gamma) + '\t';
  out += std::to_string(row.kappa) + '\t';
  out += std::string(connectivity::to_string(row.method)) + '\t';
  out += opt_bool(row.ok_closed) + '\t';
  out += opt_bool(row.ok_naive);
  return out;
}

std::string to_jsonl(const SweepRow& row) {
  json_io::Json j;
  auto put = [&j](const char* key, const auto& v) {
    if (v) {
      j[key] = *v;
    } else {
      j[key] = nullptr;
    }
  };
  j["n"] = row.n;
  j["r"] = row.r;
  j["exps"] = row.exponents;
  put("alpha", row.alpha);
  put("beta", row.beta);
  put("gamma", row.gamma);
  j["kappa"] = row.kappa;
  j["method"] = std::string(connectivity::to_string(row.method));
  put("ok_closed", row.ok_closed);
  put("ok_naive", row.ok_naive);
  return j.dump();
}

}  // namespace powergraph::sweep
