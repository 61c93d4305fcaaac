// pgkappa: vertex connectivity of the power graph of C_n.
//
//   pgkappa kappa N [--method auto|closed|quotient|naive] [--witness]
//   pgkappa bounds N
//   pgkappa quotient N
//   pgkappa cutset N --which Y:j|Z:j|X:a,b|optimal
//   pgkappa sweep LO HI [--check-oracle-cap C] [--jobs J] [--format tsv|jsonl]
//
// Exit codes: 0 ok, 2 bad input, 3 no closed form, 4 sweep disagreement.

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "powergraph/connectivity.hpp"
#include "powergraph/cutsets.hpp"
#include "powergraph/json_io.hpp"
#include "powergraph/sweep.hpp"

namespace {

using namespace powergraph;
using numtheory::Int;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoClosedForm = 3;
constexpr int kExitDisagreement = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& text, const char* what) {
  Int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw UsageError(std::string(what) + ": not an integer: '" + text + "'");
  }
  return value;
}

std::size_t explicit_cap_from_env() {
  const char* env = std::getenv("KAPPA_EXPLICIT_CAP");
  if (env == nullptr) return graphcore::kDefaultExplicitCap;
  const Int cap = parse_int(env, "KAPPA_EXPLICIT_CAP");
  if (cap < 1) throw UsageError("KAPPA_EXPLICIT_CAP must be positive");
  return static_cast<std::size_t>(cap);
}

connectivity::KappaOptions kappa_options() {
  connectivity::KappaOptions opt;
  opt.explicit_cap = explicit_cap_from_env();
  if (std::getenv("KAPPA_EXPLICIT_CAP") != nullptr) opt.naive_cap = opt.explicit_cap;
  return opt;
}

numtheory::Factorization parse_n(const std::string& text) {
  const Int n = parse_int(text, "n");
  if (n < 2) throw UsageError("n must be >= 2, got " + text);
  return numtheory::factorize(n);
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? comma : comma - start);
    const Int v = parse_int(part, "index");
    if (v < 1) throw UsageError("prime indices are 1-based");
    out.push_back(static_cast<std::size_t>(v));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

cutsets::CutKind parse_cut_kind(const std::string& which) {
  if (which.size() < 3 || which[1] != ':') throw UsageError("bad --which value: " + which);
  const auto idx = parse_indices(which.substr(2));
  switch (which[0]) {
    case 'Y':
    case 'Z':
      if (idx.size() != 1) throw UsageError(which + ": expected one index");
      return which[0] == 'Y' ? cutsets::CutKind::Y(idx[0]) : cutsets::CutKind::Z(idx[0]);
    case 'X':
      if (idx.size() != 2) throw UsageError(which + ": expected two indices a,b");
      return cutsets::CutKind::X(idx[0], idx[1]);
    default: throw UsageError("bad --which family: " + which);
  }
}

int cmd_kappa(const std::string& n_text, const std::string& method_text, bool witness) {
  const auto f = parse_n(n_text);
  const auto method = connectivity::parse_solve_method(method_text);
  if (!method) throw UsageError("unknown --method " + method_text);
  try {
    const auto res = connectivity::kappa(f, *method, kappa_options());
    std::cout << json_io::dump(json_io::kappa_result(res, witness)) << '\n';
  } catch (const NoClosedForm& e) {
    std::cerr << e.what() << '\n';
    return kExitNoClosedForm;
  }
  return kExitOk;
}

int cmd_bounds(const std::string& n_text) {
  const auto f = parse_n(n_text);
  std::cout << json_io::dump(json_io::bounds_report(f)) << '\n';
  return kExitOk;
}

int cmd_quotient(const std::string& n_text) {
  const Int n = parse_int(n_text, "n");
  if (n < 1) throw UsageError("n must be >= 1");
  const auto g = graphcore::build_divisor_graph(numtheory::factorize(n));
  std::cout << json_io::dump(json_io::divisor_graph(g)) << '\n';
  return kExitOk;
}

int cmd_cutset(const std::string& n_text, const std::string& which) {
  const auto f = parse_n(n_text);
  ClassSet cut;
  std::string label = which;
  if (which == "optimal") {
    if (f.r() < 2) throw UsageError("P(C_n) is complete for prime-power n; no cut-set exists");
    const auto res = connectivity::kappa(f, connectivity::SolveMethod::Auto, kappa_options());
    std::vector<Int> classes;
    for (const auto& e : *res.witness) {
      if (e.count != numtheory::phi_of_divisor(f, e.divisor)) {
        throw std::logic_error("optimal cut is not a union of classes");
      }
      classes.push_back(e.divisor);
    }
    cut = ClassSet(f.value, std::move(classes));
  } else {
    const auto kind = parse_cut_kind(which);
    cut = cutsets::build(f, kind);
    label = kind.label();
  }
  const auto verdict = cutsets::verify_cutset(f, cut);
  auto out = json_io::class_set(cut, f);
  out["which"] = label;
  out["verdict"] = verdict.is_cut ? "cut" : "not-cut";
  out["components"] = verdict.components;
  std::cout << json_io::dump(out) << '\n';
  return kExitOk;
}

int cmd_sweep(const std::string& lo_text, const std::string& hi_text, Int oracle_cap, Int jobs,
              const std::string& format) {
  if (format != "tsv" && format != "jsonl") throw UsageError("unknown --format " + format);
  if (oracle_cap < 0) throw UsageError("--check-oracle-cap must be >= 0");
  if (jobs < 1) throw UsageError("--jobs must be >= 1");
  sweep::SweepOptions opt;
  opt.lo = parse_int(lo_text, "lo");
  opt.hi = parse_int(hi_text, "hi");
  if (opt.lo < 2 || opt.lo > opt.hi) throw UsageError("sweep range must satisfy 2 <= lo <= hi");
  opt.oracle_cap = static_cast<std::size_t>(oracle_cap);
  opt.jobs = static_cast<std::size_t>(jobs);
  opt.explicit_cap = explicit_cap_from_env();

  const auto rows = sweep::run_sweep(opt);
  std::size_t bad = 0;
  std::size_t naive_checked = 0;
  if (format == "tsv") std::cout << sweep::tsv_header() << '\n';
  for (const auto& row : rows) {
    std::cout << (format == "tsv" ? sweep::to_tsv(row) : sweep::to_jsonl(row)) << '\n';
    if (!row.ok()) ++bad;
    if (row.ok_naive) ++naive_checked;
  }
  std::cout.flush();
  std::cerr << "rows=" << rows.size() << " naive_checked=" << naive_checked
            << " disagreements=" << bad << '\n';
  return bad == 0 ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex connectivity of the power graph of a finite cyclic group"};
  app.require_subcommand(1);

  std::string n_text;
  std::string method = "auto";
  bool witness = false;
  auto* kappa = app.add_subcommand("kappa", "Compute kappa(P(C_n)) as JSON");
  kappa->add_option("n", n_text, "Group order")->required();
  kappa->add_option("--method", method, "auto|closed|quotient|naive");
  kappa->add_flag("--witness", witness, "Include a cut realizing kappa");

  auto* bounds = app.add_subcommand("bounds", "Report the cut-set size formulas and orderings");
  bounds->add_option("n", n_text, "Group order")->required();

  auto* quotient = app.add_subcommand("quotient", "Dump the divisor quotient graph");
  quotient->add_option("n", n_text, "Group order")->required();

  std::string which;
  auto* cutset = app.add_subcommand("cutset", "Build and verify a cut-set");
  cutset->add_option("n", n_text, "Group order")->required();
  cutset->add_option("--which", which, "Y:j | Z:j | X:a,b | optimal")->required();

  std::string lo_text;
  std::string hi_text;
  Int oracle_cap = 200;
  Int jobs = 1;
  std::string format = "tsv";
  auto* sweep_cmd = app.add_subcommand("sweep", "Reconcile all solvers over a range of n");
  sweep_cmd->add_option("lo", lo_text)->required();
  sweep_cmd->add_option("hi", hi_text)->required();
  sweep_cmd->add_option("--check-oracle-cap", oracle_cap, "Run the naive oracle for n <= C");
  sweep_cmd->add_option("--jobs", jobs, "Worker threads");
  sweep_cmd->add_option("--format", format, "tsv|jsonl");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*kappa) return cmd_kappa(n_text, method, witness);
    if (*bounds) return cmd_bounds(n_text);
    if (*quotient) return cmd_quotient(n_text);
    if (*cutset) return cmd_cutset(n_text, which);
    if (*sweep_cmd) return cmd_sweep(lo_text, hi_text, oracle_cap, jobs, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
