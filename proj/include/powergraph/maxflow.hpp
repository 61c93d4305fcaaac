#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace powergraph::flow {

using Capacity = std::int64_t;

/// Integer-capacity max-flow by shortest augmenting paths (Dinic: BFS level
/// graph, then blocking flow along it). Arcs are directed; add both
/// directions for an undirected edge.
class FlowNetwork {
public:
  explicit FlowNetwork(std::size_t nodes = 0);

  std::size_t add_node();
  std::size_t node_count() const noexcept { return head_.size(); }
  /// Returns the arc id; the paired residual arc is id ^ 1.
  std::size_t add_arc(std::size_t from, std::size_t to, Capacity cap);

  /// Maximum flow from s to t, stopping early once `limit` units are routed.
  /// Capacities are consumed; call reset() before reusing the network.
  Capacity max_flow(std::size_t s, std::size_t t, Capacity limit);

  /// Restores every arc to the capacity it was added with.
  void reset();

  /// Nodes reachable from s in the residual graph after max_flow.
  std::vector<bool> source_side(std::size_t s) const;

  std::size_t arc_from(std::size_t id) const { return arcs_[id ^ 1].to; }
  std::size_t arc_to(std::size_t id) const { return arcs_[id].to; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  Capacity arc_residual(std::size_t id) const { return arcs_[id].cap; }

private:
  struct Arc {
    std::size_t to;
    Capacity cap;
    std::size_t next;
  };
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool build_levels(std::size_t s, std::size_t t);
  Capacity push(std::size_t v, std::size_t t, Capacity pushed);

  std::vector<Arc> arcs_;
  std::vector<Capacity> initial_cap_;
  std::vector<std::size_t> head_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  std::vector<std::size_t> queue_;
  std::vector<std::size_t> path_;
};

}  // namespace powergraph::flow
