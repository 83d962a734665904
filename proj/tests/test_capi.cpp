#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

#include "dapsp.h"

TEST_CASE("graph parse, inspect, serialize") {
  dapsp_graph* g = nullptr;
  CHECK(dapsp_graph_parse("3 2\n0 1 5\n1 2 7\n", &g) == DAPSP_OK);
  REQUIRE(g);
  CHECK(dapsp_graph_capacity(g) == 3);
  CHECK(dapsp_graph_alive_count(g) == 3);
  CHECK(dapsp_graph_edge_count(g) == 2);
  CHECK(dapsp_graph_node_alive(g, 1) == 1);

  char* text = nullptr;
  CHECK(dapsp_graph_serialize(g, &text) == DAPSP_OK);
  REQUIRE(text);
  dapsp_graph* g2 = nullptr;
  CHECK(dapsp_graph_parse(text, &g2) == DAPSP_OK);
  CHECK(dapsp_graph_edge_count(g2) == 2);
  dapsp_string_free(text);
  dapsp_graph_free(g2);
  dapsp_graph_free(g);
}

TEST_CASE("parse errors report codes and messages") {
  dapsp_graph* g = nullptr;
  CHECK(dapsp_graph_parse("", &g) == DAPSP_ERR_MALFORMED_INPUT);
  CHECK(g == nullptr);
  CHECK(std::strlen(dapsp_last_error()) > 0);
  CHECK(dapsp_graph_parse("2 1\n0 9 1\n", &g) == DAPSP_ERR_EDGE_TO_DEAD_NODE);
}

TEST_CASE("graph mutation error codes") {
  dapsp_graph* g = nullptr;
  REQUIRE(dapsp_graph_parse("2 1\n0 1 3\n", &g) == DAPSP_OK);
  CHECK(dapsp_graph_delete_node(g, 1) == DAPSP_OK);
  CHECK(dapsp_graph_delete_node(g, 1) == DAPSP_ERR_DELETE_MISSING);
  const uint32_t src = 0;
  const int64_t w = 2;
  CHECK(dapsp_graph_insert_node(g, 2, &src, &w, 1, nullptr, nullptr, 0) == DAPSP_OK);
  CHECK(dapsp_graph_insert_node(g, 2, nullptr, nullptr, 0, nullptr, nullptr, 0) ==
        DAPSP_ERR_INSERT_DUPLICATE);
  dapsp_graph_free(g);
}

TEST_CASE("oracle through the C boundary") {
  dapsp_graph* g = nullptr;
  REQUIRE(dapsp_graph_parse("3 3\n0 1 1\n1 2 1\n2 0 1\n", &g) == DAPSP_OK);
  std::vector<int64_t> dist(9);
  CHECK(dapsp_oracle_apsp(g, dist.data()) == DAPSP_OK);
  CHECK(dist[0 * 3 + 2] == 2);
  dapsp_graph_free(g);

  dapsp_graph* neg = nullptr;
  REQUIRE(dapsp_graph_parse("2 2\n0 1 1\n1 0 -2\n", &neg) == DAPSP_OK);
  std::vector<int64_t> d2(4);
  CHECK(dapsp_oracle_apsp(neg, d2.data()) == DAPSP_ERR_NEGATIVE_CYCLE);
  dapsp_graph_free(neg);
}

TEST_CASE("engine lifecycle, queries and stats") {
  dapsp_graph* g = nullptr;
  REQUIRE(dapsp_graph_parse("4 4\n0 1 1\n1 2 1\n2 3 1\n0 3 9\n", &g) == DAPSP_OK);
  dapsp_engine_config cfg{};
  cfg.variant = DAPSP_VARIANT_RAND_WEIGHTED;
  cfg.seed = 7;
  dapsp_engine* e = nullptr;
  REQUIRE(dapsp_engine_create(g, &cfg, &e) == DAPSP_OK);
  dapsp_graph_free(g);

  int64_t d = 0;
  CHECK(dapsp_engine_query_dist(e, 0, 3, &d) == DAPSP_OK);
  CHECK(d == 3);

  CHECK(dapsp_engine_delete_node(e, 1) == DAPSP_OK);
  CHECK(dapsp_engine_query_dist(e, 0, 3, &d) == DAPSP_OK);
  CHECK(d == 9);
  CHECK(dapsp_engine_node_alive(e, 1) == 0);
  CHECK(dapsp_engine_query_dist(e, 1, 3, &d) == DAPSP_ERR_DEAD_ENDPOINT);

  dapsp_update_stats st{};
  CHECK(dapsp_engine_last_stats(e, &st) == DAPSP_OK);
  CHECK(st.centers_total > 0);

  const uint32_t in_src = 0;
  const int64_t in_w = 1;
  const uint32_t out_dst = 3;
  const int64_t out_w = 1;
  CHECK(dapsp_engine_insert_node(e, 4, &in_src, &in_w, 1, &out_dst, &out_w, 1) == DAPSP_OK);
  CHECK(dapsp_engine_query_dist(e, 0, 3, &d) == DAPSP_OK);
  CHECK(d == 2);

  std::vector<int64_t> dist(std::size_t(dapsp_engine_capacity(e)) * dapsp_engine_capacity(e));
  CHECK(dapsp_engine_distances(e, dist.data()) == DAPSP_OK);
  CHECK(dist[0 * 5 + 4] == 1);
  dapsp_engine_free(e);
}

TEST_CASE("query_path buffer semantics") {
  dapsp_graph* g = nullptr;
  REQUIRE(dapsp_graph_parse("4 3\n0 1 1\n1 2 1\n2 3 1\n", &g) == DAPSP_OK);
  dapsp_engine_config cfg{};
  dapsp_engine* e = nullptr;
  REQUIRE(dapsp_engine_create(g, &cfg, &e) == DAPSP_OK);
  dapsp_graph_free(g);

  uint32_t buf[2];
  size_t len = 0;
  CHECK(dapsp_engine_query_path(e, 0, 3, buf, 2, &len) == DAPSP_ERR_BUFFER_TOO_SMALL);
  CHECK(len == 4);
  std::vector<uint32_t> full(len);
  CHECK(dapsp_engine_query_path(e, 0, 3, full.data(), full.size(), &len) == DAPSP_OK);
  CHECK(full == std::vector<uint32_t>{0, 1, 2, 3});
  CHECK(dapsp_engine_query_path(e, 3, 0, full.data(), full.size(), &len) ==
        DAPSP_ERR_PATH_UNAVAILABLE);
  dapsp_engine_free(e);
}

TEST_CASE("engine rejects a negative cycle closing insert") {
  dapsp_graph* g = nullptr;
  REQUIRE(dapsp_graph_parse("2 1\n0 1 2\n", &g) == DAPSP_OK);
  dapsp_engine_config cfg{};
  dapsp_engine* e = nullptr;
  REQUIRE(dapsp_engine_create(g, &cfg, &e) == DAPSP_OK);
  dapsp_graph_free(g);
  const uint32_t in_src = 1;
  const int64_t in_w = 1;
  const uint32_t out_dst = 0;
  const int64_t out_w = -9;
  CHECK(dapsp_engine_insert_node(e, 2, &in_src, &in_w, 1, &out_dst, &out_w, 1) ==
        DAPSP_ERR_NEGATIVE_CYCLE_INTRODUCED);
  int64_t d = 0;
  CHECK(dapsp_engine_query_dist(e, 0, 1, &d) == DAPSP_OK);
  CHECK(d == 2);
  dapsp_engine_free(e);
}

TEST_CASE("infinity constant is exposed") {
  dapsp_graph* g = nullptr;
  REQUIRE(dapsp_graph_parse("2 0\n", &g) == DAPSP_OK);
  dapsp_engine_config cfg{};
  dapsp_engine* e = nullptr;
  REQUIRE(dapsp_engine_create(g, &cfg, &e) == DAPSP_OK);
  dapsp_graph_free(g);
  int64_t d = 0;
  CHECK(dapsp_engine_query_dist(e, 0, 1, &d) == DAPSP_OK);
  CHECK(d == dapsp_infinity());
  dapsp_engine_free(e);
}
