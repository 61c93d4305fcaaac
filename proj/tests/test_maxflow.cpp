#include <doctest.h>

#include "powergraph/maxflow.hpp"

using powergraph::flow::FlowNetwork;

namespace {

// Classic six-node example with max flow 23.
FlowNetwork textbook() {
  FlowNetwork net(6);
  net.add_arc(0, 1, 16);
  net.add_arc(0, 2, 13);
  net.add_arc(1, 2, 10);
  net.add_arc(2, 1, 4);
  net.add_arc(1, 3, 12);
  net.add_arc(3, 2, 9);
  net.add_arc(2, 4, 14);
  net.add_arc(4, 3, 7);
  net.add_arc(3, 5, 20);
  net.add_arc(4, 5, 4);
  return net;
}

}  // namespace

TEST_CASE("max flow on a textbook network") {
  auto net = textbook();
  CHECK(net.max_flow(0, 5, 1000) == 23);
  const auto side = net.source_side(0);
  CHECK(side[0]);
  CHECK_FALSE(side[5]);
  // Capacity of arcs leaving the source side equals the flow.
  auto fresh = textbook();
  long cut = 0;
  for (std::size_t e = 0; e < fresh.arc_count(); e += 2) {
    if (side[fresh.arc_from(e)] && !side[fresh.arc_to(e)]) cut += fresh.arc_residual(e);
  }
  CHECK(cut == 23);
}

TEST_CASE("max flow stops at the limit") {
  auto net = textbook();
  CHECK(net.max_flow(0, 5, 10) == 10);
}

TEST_CASE("disconnected terminals carry no flow") {
  FlowNetwork net(4);
  net.add_arc(0, 1, 5);
  net.add_arc(2, 3, 5);
  CHECK(net.max_flow(0, 3, 100) == 0);
  CHECK_THROWS(net.max_flow(0, 0, 1));
}

TEST_CASE("unit vertex capacities count disjoint paths") {
  // Grid of 3 parallel two-hop paths through split nodes.
  FlowNetwork net(2);
  for (int i = 0; i < 3; ++i) {
    const auto in = net.add_node();
    const auto out = net.add_node();
    net.add_arc(in, out, 1);
    net.add_arc(0, in, 100);
    net.add_arc(out, 1, 100);
  }
  CHECK(net.max_flow(0, 1, 100) == 3);
}
