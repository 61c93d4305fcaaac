#include "powergraph/connectivity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <stdexcept>

#include "powergraph/cutsets.hpp"
#include "powergraph/maxflow.hpp"
#include "powergraph/simd/bitset_kernels.hpp"

namespace powergraph::connectivity {

using flow::FlowNetwork;

std::string_view to_string(Method m) {
  switch (m) {
    case Method::CompleteGraph: return "complete-graph";
    case Method::TwoPrimes: return "two-primes";
    case Method::NrAtLeast2MinAlphaBeta: return "nr2-min-alpha-beta";
    case Method::R3MinAlphaBeta: return "r3-min-alpha-beta";
    case Method::SquarefreeMinAlphaGamma: return "squarefree-min-alpha-gamma";
    case Method::SharpAlpha: return "sharp-alpha";
    case Method::QuotientExact: return "quotient-exact";
    case Method::NaiveOracle: return "naive-oracle";
  }
  return "unknown";
}

std::optional<Int> Bounds::min() const {
  std::optional<Int> out;
  for (const auto& b : {alpha, beta, gamma}) {
    if (b && (!out || *b < *out)) out = b;
  }
  return out;
}

Bounds compute_bounds(const Factorization& f) {
  Bounds b;
  if (f.r() >= 2) {
    b.alpha = cutsets::alpha(f);
    b.beta = cutsets::beta(f);
  }
  if (f.r() >= 3) b.gamma = cutsets::gamma(f);
  return b;
}

namespace {

void require_n_at_least_2(const Factorization& f) {
  if (f.value < 2) {
    throw DomainError("vertex connectivity needs n >= 2, got " + std::to_string(f.value));
  }
}

std::vector<ClassCount> full_classes(const Factorization& f, const ClassSet& s) {
  std::vector<ClassCount> out;
  out.reserve(s.members().size());
  for (Int d : s.members()) out.push_back({d, numtheory::phi_of_divisor(f, d)});
  return out;
}

KappaResult closed(const Factorization& f, const Bounds& bounds, Method m, Int value,
                   const std::optional<ClassSet>& cut) {
  KappaResult res;
  res.n = f.value;
  res.kappa = value;
  res.method = m;
  res.bounds = bounds;
  if (cut) res.witness = full_classes(f, *cut);
  return res;
}

}  // namespace

std::optional<KappaResult> kappa_closed_form(const Factorization& f) {
  require_n_at_least_2(f);
  const Bounds bounds = compute_bounds(f);
  const std::size_t r = f.r();

  if (r == 1) {
    return closed(f, bounds, Method::CompleteGraph, f.value - 1, std::nullopt);
  }
  const Int a = *bounds.alpha;
  const Int b = *bounds.beta;
  if (r == 2) {
    return closed(f, bounds, Method::TwoPrimes, a, cutsets::build_Y(f, r));
  }
  if (f.exponent(r) >= 2) {
    return closed(f, bounds, Method::NrAtLeast2MinAlphaBeta, std::min(a, b),
                  a <= b ? cutsets::build_Y(f, r) : cutsets::build_Z(f, r));
  }
  if (r == 3) {
    return closed(f, bounds, Method::R3MinAlphaBeta, std::min(a, b),
                  a <= b ? cutsets::build_Y(f, r) : cutsets::build_Z(f, r));
  }
  const Int g = *bounds.gamma;
  if (f.is_squarefree()) {
    return closed(f, bounds, Method::SquarefreeMinAlphaGamma, std::min(a, g),
                  a <= g ? cutsets::build_Y(f, r) : cutsets::build_X(f, r - 1, r));
  }
  const std::span<const Int> head(f.primes.data(), r - 1);
  if (numtheory::totient_doubling_test(head) == numtheory::TotientComparison::Greater) {
    return closed(f, bounds, Method::SharpAlpha, a, cutsets::build_Y(f, r));
  }
  return std::nullopt;
}

std::string open_region_message(const Factorization& f) {
  return "no closed form for n=" + std::to_string(f.value) +
         ": r≥4, n_r=1, non-squarefree, 2φ(rad/p_r)<rad/p_r";
}

KappaResult kappa_quotient_exact(const Factorization& f) {
  require_n_at_least_2(f);
  const auto g = graphcore::build_divisor_graph(f);
  const std::size_t m = g.size();
  const flow::Capacity inf = f.value;

  KappaResult best;
  best.n = f.value;
  best.kappa = f.value - 1;
  best.method = Method::QuotientExact;
  best.bounds = compute_bounds(f);

  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (g.adjacent(a, b)) continue;

      // Node layout: in/out pair per class (terminal classes unused), then the
      // source, sink, and the split co-member nodes of the terminal classes.
      FlowNetwork net(2 * m);
      auto in = [](std::size_t d) { return 2 * d; };
      auto out = [](std::size_t d) { return 2 * d + 1; };
      for (std::size_t d = 0; d < m; ++d) {
        if (d != a && d != b) net.add_arc(in(d), out(d), g.weight[d]);
      }
      const std::size_t source = net.add_node();
      const std::size_t sink = net.add_node();
      const std::size_t co_a_in = net.add_node();
      const std::size_t co_a_out = net.add_node();
      const std::size_t co_b_in = net.add_node();
      const std::size_t co_b_out = net.add_node();
      net.add_arc(co_a_in, co_a_out, g.weight[a] - 1);
      net.add_arc(co_b_in, co_b_out, g.weight[b] - 1);
      net.add_arc(source, co_a_in, inf);
      net.add_arc(co_b_out, sink, inf);

      for (std::size_t x : g.neighbors[a]) {
        net.add_arc(source, in(x), inf);
        net.add_arc(co_a_out, in(x), inf);
      }
      for (std::size_t x : g.neighbors[b]) {
        net.add_arc(out(x), sink, inf);
        net.add_arc(out(x), co_b_in, inf);
      }
      for (std::size_t x = 0; x < m; ++x) {
        if (x == a || x == b) continue;
        for (std::size_t y : g.neighbors[x]) {
          if (y != a && y != b) net.add_arc(out(x), in(y), inf);
        }
      }

      const flow::Capacity value = net.max_flow(source, sink, best.kappa);
      // A non-complete graph has κ <= n-2, so the first pair always improves.
      if (value >= best.kappa) continue;

      const auto reach = net.source_side(source);
      std::vector<ClassCount> witness;
      if (reach[co_a_in] && !reach[co_a_out]) witness.push_back({g.nodes[a], g.weight[a] - 1});
      if (reach[co_b_in] && !reach[co_b_out]) witness.push_back({g.nodes[b], g.weight[b] - 1});
      for (std::size_t d = 0; d < m; ++d) {
        if (d != a && d != b && reach[in(d)] && !reach[out(d)]) {
          witness.push_back({g.nodes[d], g.weight[d]});
        }
      }
      std::sort(witness.begin(), witness.end(),
                [](const ClassCount& l, const ClassCount& r) { return l.divisor < r.divisor; });
      best.kappa = value;
      best.witness = std::move(witness);
    }
  }
  return best;
}

KappaResult kappa_naive(const graphcore::ExplicitGraph& g, std::size_t cap) {
  if (g.vertex_count() > cap) {
    throw CapExceeded("naive oracle for n=" + std::to_string(g.n()) + " exceeds cap " +
                      std::to_string(cap));
  }
  if (g.n() < 2) throw DomainError("vertex connectivity needs n >= 2");
  const std::size_t nv = g.vertex_count();

  KappaResult best;
  best.n = g.n();
  best.kappa = static_cast<Int>(nv) - 1;
  best.method = Method::NaiveOracle;
  best.bounds = compute_bounds(numtheory::factorize(g.n()));

  std::vector<std::vector<std::size_t>> adj(nv);
  std::size_t min_vertex = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    adj[v] = g.neighbors(v);
    if (adj[v].size() < adj[min_vertex].size()) min_vertex = v;
  }
  if (adj[min_vertex].size() == nv - 1) return best;  // complete

  // Removing the neighbourhood of a minimum-degree vertex isolates it.
  best.kappa = static_cast<Int>(adj[min_vertex].size());
  std::vector<ClassCount> deg_witness;
  {
    std::map<Int, Int> by_order;
    for (std::size_t u : adj[min_vertex]) ++by_order[g.order(u)];
    for (auto [d, c] : by_order) deg_witness.push_back({d, c});
  }
  best.witness = deg_witness;

  // Vertex-split network: v_in = 2v, v_out = 2v+1.
  const flow::Capacity inf = static_cast<flow::Capacity>(nv);
  FlowNetwork net(2 * nv);
  for (std::size_t v = 0; v < nv; ++v) net.add_arc(2 * v, 2 * v + 1, 1);
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t u : adj[v]) net.add_arc(2 * v + 1, 2 * u, inf);
  }

  // Common neighbours of a non-adjacent pair give internally disjoint paths,
  // so pairs with at least κ of them cannot improve the bound.
  const std::size_t words = g.words();
  std::vector<simd::Word> rows(nv * words);
  for (std::size_t v = 0; v < nv; ++v) g.row(v, std::span(rows).subspan(v * words, words));
  const auto& kernels = simd::active_kernels();

  // True twins (equal closed neighbourhoods) can be swapped by an
  // automorphism, so a pair's local connectivity depends only on the twin
  // classes of its endpoints. Twins are read off the rows, not the orders.
  std::vector<std::size_t> twin(nv);
  {
    std::map<std::vector<simd::Word>, std::size_t> seen;
    for (std::size_t v = 0; v < nv; ++v) {
      std::vector<simd::Word> closed(rows.begin() + static_cast<std::ptrdiff_t>(v * words),
                                     rows.begin() + static_cast<std::ptrdiff_t>((v + 1) * words));
      simd::set_bit(closed, v);
      twin[v] = seen.emplace(std::move(closed), seen.size()).first->second;
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> tried;

  // Even: some vertex among the first κ+1 lies outside a minimum cut, and it
  // has a non-neighbour of larger index on the other side.
  for (std::size_t i = 0; static_cast<Int>(i) <= best.kappa && i < nv; ++i) {
    std::vector<bool> is_neighbor(nv, false);
    for (std::size_t u : adj[i]) is_neighbor[u] = true;
    for (std::size_t j = i + 1; j < nv; ++j) {
      if (is_neighbor[j]) continue;
      if (!tried.insert(std::minmax(twin[i], twin[j])).second) continue;
      const auto common = kernels.and_popcount(&rows[i * words], &rows[j * words], words);
      if (static_cast<Int>(common) >= best.kappa) continue;
      net.reset();
      const flow::Capacity value = net.max_flow(2 * i + 1, 2 * j, best.kappa);
      if (value >= best.kappa) continue;
      const auto reach = net.source_side(2 * i + 1);
      std::map<Int, Int> by_order;
      for (std::size_t v = 0; v < nv; ++v) {
        if (reach[2 * v] && !reach[2 * v + 1]) ++by_order[g.order(v)];
      }
      std::vector<ClassCount> witness;
      for (auto [d, c] : by_order) witness.push_back({d, c});
      best.kappa = value;
      best.witness = std::move(witness);
    }
  }
  return best;
}

std::optional<SolveMethod> parse_solve_method(std::string_view s) {
  if (s == "auto") return SolveMethod::Auto;
  if (s == "closed") return SolveMethod::Closed;
  if (s == "quotient") return SolveMethod::Quotient;
  if (s == "naive") return SolveMethod::Naive;
  return std::nullopt;
}

KappaResult kappa(const Factorization& f, SolveMethod method, const KappaOptions& options) {
  require_n_at_least_2(f);
  KappaResult res;
  switch (method) {
    case SolveMethod::Auto: {
      auto cf = kappa_closed_form(f);
      res = cf ? std::move(*cf) : kappa_quotient_exact(f);
      break;
    }
    case SolveMethod::Closed: {
      auto cf = kappa_closed_form(f);
      if (!cf) throw NoClosedForm(open_region_message(f));
      res = std::move(*cf);
      break;
    }
    case SolveMethod::Quotient: res = kappa_quotient_exact(f); break;
    case SolveMethod::Naive: {
      const auto g = graphcore::expand_explicit(f, options.explicit_cap);
      res = kappa_naive(g, options.naive_cap);
      break;
    }
  }
  res.bounds = compute_bounds(f);
  if (auto ub = res.bounds.min(); ub && res.kappa > *ub) {
    throw std::logic_error("kappa " + std::to_string(res.kappa) + " exceeds bound " +
                           std::to_string(*ub) + " for n=" + std::to_string(f.value));
  }
  if (f.r() >= 2 && res.kappa < numtheory::phi(f) + 1) {
    throw std::logic_error("kappa below phi(n)+1 for n=" + std::to_string(f.value));
  }
  return res;
}

bool witness_disconnects(const graphcore::ExplicitGraph& g, const KappaResult& result) {
  if (!result.witness) return false;
  Int total = 0;
  for (const auto& e : *result.witness) total += e.count;
  if (total != result.kappa) return false;
  const auto alive = graphcore::alive_without(g, *result.witness);
  return graphcore::explicit_disconnected(g, alive);
}

}  // namespace powergraph::connectivity
