#include "powergraph/maxflow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

namespace powergraph::flow {

FlowNetwork::FlowNetwork(std::size_t nodes) : head_(nodes, kNone) {}

std::size_t FlowNetwork::add_node() {
  head_.push_back(kNone);
  return head_.size() - 1;
}

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, Capacity cap) {
  if (from >= head_.size() || to >= head_.size()) throw std::out_of_range("add_arc: bad node");
  if (cap < 0) throw std::invalid_argument("add_arc: negative capacity");
  const std::size_t id = arcs_.size();
  arcs_.push_back({to, cap, head_[from]});
  head_[from] = id;
  arcs_.push_back({from, 0, head_[to]});
  head_[to] = id + 1;
  initial_cap_.push_back(cap);
  initial_cap_.push_back(0);
  return id;
}

void FlowNetwork::reset() {
  for (std::size_t e = 0; e < arcs_.size(); ++e) arcs_[e].cap = initial_cap_[e];
}

bool FlowNetwork::build_levels(std::size_t s, std::size_t t) {
  level_.assign(head_.size(), -1);
  queue_.clear();
  queue_.push_back(s);
  level_[s] = 0;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const std::size_t v = queue_[head];
    // Nodes at or beyond t's level cannot lie on a shortest s-t path.
    if (level_[t] >= 0 && level_[v] >= level_[t]) break;
    for (std::size_t e = head_[v]; e != kNone; e = arcs_[e].next) {
      const Arc& a = arcs_[e];
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        queue_.push_back(a.to);
      }
    }
  }
  return level_[t] >= 0;
}

// Iterative DFS for one augmenting path in the level graph; returns the
// bottleneck pushed (0 when the level graph is blocked).
Capacity FlowNetwork::push(std::size_t s, std::size_t t, Capacity pushed) {
  std::vector<std::size_t>& path = path_;  // arc ids
  path.clear();
  std::size_t v = s;
  for (;;) {
    if (v == t) {
      Capacity bottleneck = pushed;
      for (std::size_t e : path) bottleneck = std::min(bottleneck, arcs_[e].cap);
      for (std::size_t e : path) {
        arcs_[e].cap -= bottleneck;
        arcs_[e ^ 1].cap += bottleneck;
      }
      return bottleneck;
    }
    bool advanced = false;
    for (std::size_t& e = cursor_[v]; e != kNone; e = arcs_[e].next) {
      const Arc& a = arcs_[e];
      if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
        path.push_back(e);
        v = a.to;
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    if (path.empty()) return 0;
    // Dead end: retreat and skip the arc that led here.
    level_[v] = -1;
    const std::size_t back = path.back();
    path.pop_back();
    v = arcs_[back ^ 1].to;
    cursor_[v] = arcs_[cursor_[v]].next;
  }
}

Capacity FlowNetwork::max_flow(std::size_t s, std::size_t t, Capacity limit) {
  if (s == t) throw std::invalid_argument("max_flow: source equals sink");
  Capacity total = 0;
  while (total < limit && build_levels(s, t)) {
    cursor_ = head_;
    while (total < limit) {
      const Capacity f = push(s, t, limit - total);
      if (f == 0) break;
      total += f;
    }
  }
  return total;
}

std::vector<bool> FlowNetwork::source_side(std::size_t s) const {
  std::vector<bool> seen(head_.size(), false);
  std::deque<std::size_t> queue{s};
  seen[s] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e = head_[v]; e != kNone; e = arcs_[e].next) {
      if (arcs_[e].cap > 0 && !seen[arcs_[e].to]) {
        seen[arcs_[e].to] = true;
        queue.push_back(arcs_[e].to);
      }
    }
  }
  return seen;
}

}  // namespace powergraph::flow
