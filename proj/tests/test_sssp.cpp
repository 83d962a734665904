#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dapsp/oracle.hpp"
#include "dapsp/sssp.hpp"
#include "helpers.hpp"

using namespace dapsp;

TEST_CASE("bounded_hop_sssp matches hop oracle on random graphs") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto g = testutil::random_graph(18, 2.5, 1, 30, seed);
    for (std::uint32_t h = 0; h <= 18; h += 3) {
      auto oh = hop_oracle(g, h);
      for (NodeId r = 0; r < g.capacity(); ++r) {
        auto fwd = bounded_hop_sssp(g, r, h, Direction::FromRoot);
        auto bwd = bounded_hop_sssp(g, r, h, Direction::ToRoot);
        for (NodeId v = 0; v < g.capacity(); ++v) {
          CHECK(fwd.dist[v] == oh.at(r, v));
          CHECK(bwd.dist[v] == oh.at(v, r));
          if (fwd.dist[v] != kInf) CHECK(fwd.hops[v] == oh.hops_at(r, v));
          if (bwd.dist[v] != kInf) CHECK(bwd.hops[v] == oh.hops_at(v, r));
        }
      }
    }
  }
}

TEST_CASE("bounded_hop_sssp handles negative weights with exact round semantics") {
  // 0 ->(5) 1; 0 ->(10) 2 ->(-8) 1 : dist^1(0,1)=5, dist^2(0,1)=2
  auto g = GraphSnapshot::from_edges(3, {{0, 1, 5}, {0, 2, 10}, {2, 1, -8}});
  CHECK(bounded_hop_sssp(g, 0, 1, Direction::FromRoot).dist[1] == 5);
  CHECK(bounded_hop_sssp(g, 0, 2, Direction::FromRoot).dist[1] == 2);
}

TEST_CASE("excluded nodes cut paths") {
  auto g = testutil::path_graph(5, 2);
  std::vector<std::uint8_t> ex(5, 0);
  ex[2] = 1;
  auto t = bounded_hop_sssp(g, 0, 5, Direction::FromRoot, ex);
  CHECK(t.dist[1] == 2);
  CHECK(t.dist[2] == kInf);
  CHECK(t.dist[4] == kInf);
  auto d = dijkstra_sssp(g, 0, Direction::FromRoot, ex);
  CHECK(d.dist[1] == 2);
  CHECK(d.dist[3] == kInf);
}

TEST_CASE("dijkstra on snapshot matches oracle") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto g = testutil::random_graph(22, 3.0, 0, 40, 100 + seed);
    auto o = apsp_oracle(g);
    for (NodeId r = 0; r < g.capacity(); r += 3) {
      auto fwd = dijkstra_sssp(g, r, Direction::FromRoot);
      auto bwd = dijkstra_sssp(g, r, Direction::ToRoot);
      for (NodeId v = 0; v < g.capacity(); ++v) {
        CHECK(fwd.dist[v] == o.at(r, v));
        CHECK(bwd.dist[v] == o.at(v, r));
      }
    }
  }
}

TEST_CASE("dijkstra over explicit edge list") {
  std::vector<EdgeRec> edges{{0, 1, 3}, {1, 2, 4}, {0, 2, 10}};
  auto t = dijkstra_sssp(3, edges, 0, Direction::FromRoot);
  CHECK(t.dist[2] == 7);
  auto b = dijkstra_sssp(3, edges, 2, Direction::ToRoot);
  CHECK(b.dist[0] == 7);
  CHECK(b.dist[1] == 4);
}

TEST_CASE("bfs_depth matches bounded_hop_sssp on unit graphs") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto g = testutil::random_graph(20, 2.0, 1, 1, 200 + seed);
    for (std::uint32_t h : {0u, 1u, 3u, 20u}) {
      for (NodeId r = 0; r < g.capacity(); r += 4) {
        auto a = bfs_depth(g, r, h, Direction::FromRoot);
        auto b = bounded_hop_sssp(g, r, h, Direction::FromRoot);
        CHECK(a.dist == b.dist);
        CHECK(a.link == b.link);
      }
    }
  }
}

TEST_CASE("bfs_depth rejects non-unit weights") {
  auto g = testutil::path_graph(3, 2);
  CHECK_THROWS_AS(bfs_depth(g, 0, 2, Direction::FromRoot), Error);
}

TEST_CASE("extract_path travel order and Unreachable") {
  auto g = testutil::path_graph(4, 1);
  auto fwd = bounded_hop_sssp(g, 0, 4, Direction::FromRoot);
  CHECK(extract_path(fwd, 3) == std::vector<NodeId>{0, 1, 2, 3});
  auto bwd = bounded_hop_sssp(g, 3, 4, Direction::ToRoot);
  CHECK(extract_path(bwd, 0) == std::vector<NodeId>{0, 1, 2, 3});
  auto short_tree = bounded_hop_sssp(g, 0, 1, Direction::FromRoot);
  CHECK_THROWS_AS(extract_path(short_tree, 3), Error);
}

TEST_CASE("trees are deterministic") {
  auto g = testutil::random_graph(25, 3.0, 1, 10, 7);
  auto a = bounded_hop_sssp(g, 3, 6, Direction::FromRoot);
  auto b = bounded_hop_sssp(g, 3, 6, Direction::FromRoot);
  CHECK(a.dist == b.dist);
  CHECK(a.hops == b.hops);
  CHECK(a.link == b.link);
}
