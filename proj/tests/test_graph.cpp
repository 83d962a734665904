#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dapsp/graph.hpp"
#include "helpers.hpp"

using namespace dapsp;

TEST_CASE("load_graph basic") {
  auto g = load_graph(std::string("2 1\n0 1 5\n"));
  CHECK(g.capacity() == 2);
  CHECK(g.alive_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.edge_weight(0, 1) == 5);
  CHECK(g.edge_weight(1, 0) == kInf);
}

TEST_CASE("load_graph single node, comments, blank lines") {
  auto g = load_graph(std::string("# comment\n\n1 0\n"));
  CHECK(g.capacity() == 1);
  CHECK(g.alive(0));
  CHECK(g.edge_count() == 0);
}

TEST_CASE("parallel edges collapse to min weight") {
  auto g = GraphSnapshot::from_edges(2, {{0, 1, 7}, {0, 1, 3}, {0, 1, 9}});
  CHECK(g.edge_count() == 1);
  CHECK(g.edge_weight(0, 1) == 3);
}

TEST_CASE("load_graph malformed inputs") {
  CHECK_THROWS_AS(load_graph(std::string("")), Error);
  CHECK_THROWS_AS(load_graph(std::string("x y\n")), Error);
  CHECK_THROWS_AS(load_graph(std::string("2 1\n0 1\n")), Error);
  CHECK_THROWS_AS(load_graph(std::string("2 2\n0 1 1\n")), Error);
  try {
    load_graph(std::string("2 1\n0 5 1\n"));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DanglingEndpoint);
  }
}

TEST_CASE("negative self loop rejected") {
  try {
    GraphSnapshot::from_edges(1, {{0, 0, -1}});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MalformedInput);
  }
}

TEST_CASE("overflow headroom enforced") {
  const Weight huge = kInf / 4;  // > kInf / 4 / n for n = 2
  try {
    GraphSnapshot::from_edges(2, {{0, 1, huge}});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OverflowRisk);
  }
}

TEST_CASE("delete node removes incident edges and tombstones id") {
  auto g = GraphSnapshot::from_edges(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  auto g2 = g.apply(UpdateEvent::del(1));
  CHECK(g2.alive_count() == 2);
  CHECK_FALSE(g2.alive(1));
  CHECK(g2.ever_alive(1));
  CHECK(g2.edge_count() == 1);
  CHECK(g2.edge_weight(2, 0) == 1);
  CHECK(g2.edge_weight(0, 1) == kInf);
  // original untouched
  CHECK(g.alive(1));
  CHECK(g.edge_count() == 3);
  g2.check_consistency();

  try {
    g2.apply(UpdateEvent::del(1));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DeleteMissing);
  }
}

TEST_CASE("insert node grows capacity and wires edges") {
  auto g = GraphSnapshot::from_edges(2, {{0, 1, 2}});
  auto g2 = g.apply(UpdateEvent::insert(2, {{0, 4}}, {{1, 5}}));
  CHECK(g2.capacity() == 3);
  CHECK(g2.alive(2));
  CHECK(g2.edge_weight(0, 2) == 4);
  CHECK(g2.edge_weight(2, 1) == 5);
  g2.check_consistency();

  try {
    g2.apply(UpdateEvent::insert(2, {}, {}));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InsertDuplicate);
  }
}

TEST_CASE("insert with edge to dead node rejected") {
  auto g = GraphSnapshot::from_edges(2, {{0, 1, 1}});
  auto g2 = g.apply(UpdateEvent::del(1));
  try {
    g2.apply(UpdateEvent::insert(2, {{1, 3}}, {}));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EdgeToDeadNode);
  }
}

TEST_CASE("serialize round trip") {
  auto g = testutil::random_graph(17, 3.0, 1, 50, 42);
  auto text = g.serialize();
  auto g2 = load_graph(text);
  CHECK(g2.capacity() == g.capacity());
  CHECK(g2.edge_count() == g.edge_count());
  for (NodeId u = 0; u < g.capacity(); ++u)
    for (NodeId v = 0; v < g.capacity(); ++v) CHECK(g2.edge_weight(u, v) == g.edge_weight(u, v));
}

TEST_CASE("reweighted shifts weights and rejects negatives") {
  auto g = GraphSnapshot::from_edges(3, {{0, 1, 5}, {1, 2, 5}});
  auto g2 = g.reweighted({0, 3, 6});
  CHECK(g2.edge_weight(0, 1) == 2);  // 5 + 0 - 3
  CHECK(g2.edge_weight(1, 2) == 2);
  CHECK_THROWS_AS(g.reweighted({0, 10, 0}), Error);
}

TEST_CASE("consistency holds after random event sequences") {
  auto g = testutil::random_graph(20, 2.0, 1, 9, 7);
  std::mt19937_64 rng(99);
  NodeId next_id = g.capacity();
  for (int step = 0; step < 40; ++step) {
    std::vector<NodeId> alive;
    for (NodeId v = 0; v < g.capacity(); ++v)
      if (g.alive(v)) alive.push_back(v);
    if (alive.size() > 3 && rng() % 2 == 0) {
      g = g.apply(UpdateEvent::del(alive[rng() % alive.size()]));
    } else {
      std::vector<Edge> in{{alive[rng() % alive.size()], Weight(1 + rng() % 5)}};
      std::vector<Edge> out{{alive[rng() % alive.size()], Weight(1 + rng() % 5)}};
      g = g.apply(UpdateEvent::insert(next_id++, in, out));
    }
    g.check_consistency();
  }
}
