#include "powergraph/graphcore.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <string>

namespace powergraph {

using simd::Word;

ClassSet::ClassSet(Int n, std::vector<Int> members) : n_(n), members_(std::move(members)) {
  if (n < 1) throw DomainError("ClassSet: n must be >= 1");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Int d : members_) {
    if (d < 1 || n % d != 0) {
      throw DomainError("ClassSet: " + std::to_string(d) + " does not divide " +
                        std::to_string(n));
    }
  }
}

bool ClassSet::contains(Int d) const {
  return std::binary_search(members_.begin(), members_.end(), d);
}

Int ClassSet::cardinality() const { return cardinality(numtheory::factorize(n_)); }

Int ClassSet::cardinality(const numtheory::Factorization& f) const {
  if (f.value != n_) throw DomainError("ClassSet::cardinality: factorization of wrong n");
  Int total = 0;
  for (Int d : members_) total = numtheory::checked_add(total, numtheory::phi_of_divisor(f, d));
  return total;
}

namespace graphcore {

std::size_t DivisorGraph::index_of(Int d) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), d);
  if (it == nodes.end() || *it != d) {
    throw DomainError(std::to_string(d) + " is not a divisor of " + std::to_string(n));
  }
  return static_cast<std::size_t>(it - nodes.begin());
}

bool DivisorGraph::adjacent(std::size_t i, std::size_t j) const {
  if (i == j) return false;
  const Int a = nodes[i];
  const Int b = nodes[j];
  return a % b == 0 || b % a == 0;
}

DivisorGraph build_divisor_graph(const Factorization& f) {
  DivisorGraph g;
  g.n = f.value;
  g.nodes = numtheory::divisors(f);
  g.weight.reserve(g.nodes.size());
  for (Int d : g.nodes) g.weight.push_back(numtheory::phi_of_divisor(f, d));
  g.neighbors.resize(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      if (g.adjacent(i, j)) g.neighbors[i].push_back(j);
    }
  }
  return g;
}

RemovalResult is_disconnected_after_removal(const DivisorGraph& g, const ClassSet& removed) {
  if (removed.n() != g.n) throw DomainError("removed set belongs to a different n");
  std::vector<bool> gone(g.size(), false);
  for (Int d : removed.members()) gone[g.index_of(d)] = true;
  if (std::all_of(gone.begin(), gone.end(), [](bool b) { return b; })) {
    throw DomainError("cannot remove every class");
  }

  RemovalResult out;
  std::vector<bool> seen(g.size(), false);
  std::deque<std::size_t> queue;
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (gone[start] || seen[start]) continue;
    std::vector<Int> component;
    seen[start] = true;
    queue.push_back(start);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      component.push_back(g.nodes[u]);
      for (std::size_t v : g.neighbors[u]) {
        if (gone[v] || seen[v]) continue;
        seen[v] = true;
        queue.push_back(v);
      }
    }
    std::sort(component.begin(), component.end());
    out.components.push_back(std::move(component));
  }
  out.disconnected = out.components.size() >= 2;
  return out;
}

ExplicitGraph::ExplicitGraph(const Factorization& f, std::size_t cap) : n_(f.value) {
  if (n_ < 1) throw DomainError("ExplicitGraph: n must be >= 1");
  if (static_cast<std::size_t>(n_) > cap) {
    throw CapExceeded("explicit graph for n=" + std::to_string(n_) + " exceeds cap " +
                      std::to_string(cap));
  }
  const std::size_t nv = vertex_count();
  words_ = simd::words_for(nv);
  divisors_ = numtheory::divisors(f);

  order_.resize(nv);
  class_of_.resize(nv);
  class_masks_.assign(divisors_.size() * words_, 0);
  for (std::size_t k = 0; k < nv; ++k) {
    order_[k] = n_ / std::gcd(n_, static_cast<Int>(k));
    class_of_[k] = class_index(order_[k]);
    simd::set_bit(std::span(class_masks_).subspan(class_of_[k] * words_, words_), k);
  }

  if (nv <= kMaterializeLimit) {
    rows_.assign(nv * words_, 0);
    for (std::size_t x = 0; x < nv; ++x) {
      auto row_x = std::span(rows_).subspan(x * words_, words_);
      for (std::size_t y = 0; y < nv; ++y) {
        if (x == y) continue;
        if (order_[x] % order_[y] == 0 || order_[y] % order_[x] == 0) simd::set_bit(row_x, y);
      }
    }
  }
}

std::size_t ExplicitGraph::class_index(Int d) const {
  auto it = std::lower_bound(divisors_.begin(), divisors_.end(), d);
  if (it == divisors_.end() || *it != d) {
    throw DomainError(std::to_string(d) + " is not a divisor of " + std::to_string(n_));
  }
  return static_cast<std::size_t>(it - divisors_.begin());
}

bool ExplicitGraph::adjacent(std::size_t x, std::size_t y) const {
  if (x == y) return false;
  return order_[x] % order_[y] == 0 || order_[y] % order_[x] == 0;
}

void ExplicitGraph::build_row(std::size_t v, std::span<Word> out) const {
  std::fill(out.begin(), out.end(), Word{0});
  const auto& k = simd::active_kernels();
  const Int ov = order_[v];
  for (std::size_t c = 0; c < divisors_.size(); ++c) {
    if (ov % divisors_[c] == 0 || divisors_[c] % ov == 0) {
      k.or_into(out.data(), class_masks_.data() + c * words_, words_);
    }
  }
  simd::clear_bit(out, v);
}

void ExplicitGraph::row(std::size_t v, std::span<Word> out) const {
  if (!rows_.empty()) {
    std::copy_n(rows_.begin() + static_cast<std::ptrdiff_t>(v * words_), words_, out.begin());
    return;
  }
  build_row(v, out);
}

std::vector<std::size_t> ExplicitGraph::neighbors(std::size_t v) const {
  std::vector<Word> r(words_);
  row(v, r);
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_; ++w) {
    Word bits = r[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t ExplicitGraph::degree(std::size_t v) const {
  std::vector<Word> r(words_);
  row(v, r);
  return simd::active_kernels().popcount(r.data(), words_);
}

std::span<const Word> ExplicitGraph::class_mask(Int d) const {
  return std::span(class_masks_).subspan(class_index(d) * words_, words_);
}

std::vector<std::size_t> ExplicitGraph::class_members(Int d) const {
  std::vector<std::size_t> out;
  const std::size_t c = class_index(d);
  for (std::size_t k = 0; k < vertex_count(); ++k) {
    if (class_of_[k] == c) out.push_back(k);
  }
  return out;
}

std::vector<Word> ExplicitGraph::all_vertices() const {
  std::vector<Word> out(words_, ~Word{0});
  const std::size_t tail = vertex_count() % 64;
  if (tail != 0) out.back() = (Word{1} << tail) - 1;
  return out;
}

ExplicitGraph expand_explicit(const Factorization& f, std::size_t cap) {
  return ExplicitGraph(f, cap);
}

std::vector<std::vector<std::size_t>> explicit_components(const ExplicitGraph& g,
                                                          std::span<const Word> alive,
                                                          const simd::BitsetKernels& kernels) {
  const std::size_t words = g.words();
  std::vector<Word> visited(words, 0);
  std::vector<Word> frontier(words, 0);
  std::vector<Word> next(words, 0);
  std::vector<Word> fresh(words, 0);
  std::vector<Word> row(words, 0);
  std::vector<std::vector<std::size_t>> components;

  for (std::size_t start = 0; start < g.vertex_count(); ++start) {
    if (!simd::test_bit(alive, start) || simd::test_bit(visited, start)) continue;
    std::vector<std::size_t> component;
    std::fill(frontier.begin(), frontier.end(), Word{0});
    simd::set_bit(frontier, start);
    simd::set_bit(visited, start);
    for (;;) {
      std::fill(next.begin(), next.end(), Word{0});
      for (std::size_t w = 0; w < words; ++w) {
        Word bits = frontier[w];
        while (bits != 0) {
          const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          component.push_back(u);
          g.row(u, row);
          kernels.or_into(next.data(), row.data(), words);
        }
      }
      if (!kernels.mask_new(fresh.data(), next.data(), alive.data(), visited.data(), words)) break;
      kernels.or_into(visited.data(), fresh.data(), words);
      frontier.swap(fresh);
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

std::vector<Word> alive_without_classes(const ExplicitGraph& g, const ClassSet& removed) {
  auto alive = g.all_vertices();
  for (Int d : removed.members()) {
    const auto mask = g.class_mask(d);
    for (std::size_t w = 0; w < g.words(); ++w) alive[w] &= ~mask[w];
  }
  return alive;
}

std::vector<Word> alive_without(const ExplicitGraph& g, std::span<const ClassCount> removed) {
  auto alive = g.all_vertices();
  for (const ClassCount& entry : removed) {
    const auto members = g.class_members(entry.divisor);
    if (entry.count < 0 || static_cast<std::size_t>(entry.count) > members.size()) {
      throw DomainError("cannot remove " + std::to_string(entry.count) + " vertices of order " +
                        std::to_string(entry.divisor));
    }
    for (Int i = 0; i < entry.count; ++i) {
      simd::clear_bit(alive, members[static_cast<std::size_t>(i)]);
    }
  }
  return alive;
}

bool explicit_disconnected(const ExplicitGraph& g, std::span<const Word> alive) {
  return explicit_components(g, alive).size() >= 2;
}

}  // namespace graphcore
}  // namespace powergraph
