#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "dapsp/hitting.hpp"

using namespace dapsp;

static std::vector<NodeId> iota_universe(std::uint32_t n) {
  std::vector<NodeId> u(n);
  for (std::uint32_t i = 0; i < n; ++i) u[i] = i;
  return u;
}

TEST_CASE("sample_centers returns whole universe when p >= 1") {
  SamplerConfig cfg;
  cfg.n = 16;
  cfg.seed = 5;
  auto u = iota_universe(16);
  CHECK(sample_centers(cfg, 1, u) == u);
  CHECK(sample_centers(cfg, 2, u) == u);  // x > 2 at c=3
}

TEST_CASE("sample_centers empty universe") {
  SamplerConfig cfg;
  cfg.n = 8;
  CHECK(sample_centers(cfg, 4, {}).empty());
}

TEST_CASE("sample_centers deterministic and sorted") {
  SamplerConfig cfg;
  cfg.n = 256;
  cfg.seed = 77;
  auto u = iota_universe(256);
  auto a = sample_centers(cfg, 128, u, 3);
  auto b = sample_centers(cfg, 128, u, 3);
  CHECK(a == b);
  CHECK(std::is_sorted(a.begin(), a.end()));
  auto c = sample_centers(cfg, 128, u, 4);
  CHECK(a != c);  // different sub-stream, overwhelmingly likely to differ
}

TEST_CASE("sample_centers size concentration") {
  // |C| <= 3 x n / h across many seeds.
  SamplerConfig cfg;
  cfg.n = 256;
  auto u = iota_universe(256);
  const std::uint32_t h = 128;
  const double bound = 3.0 * cfg.sampling_x() * 256.0 / h;
  for (std::uint64_t s = 0; s < 100; ++s) {
    cfg.seed = s;
    auto cset = sample_centers(cfg, h, u, 1);
    CHECK(static_cast<double>(cset.size()) <= bound);
    CHECK_FALSE(cset.empty());
  }
}

TEST_CASE("greedy_hitting_set examples") {
  CHECK(greedy_hitting_set({{1, 2}, {2, 3}}) == std::vector<NodeId>{2});
  CHECK(greedy_hitting_set({}).empty());
  // tie broken toward smaller id
  CHECK(greedy_hitting_set({{5}, {9}}) == std::vector<NodeId>{5, 9});
  CHECK(greedy_hitting_set({{3, 7}}) == std::vector<NodeId>{3});
}

TEST_CASE("greedy_hitting_set rejects empty family") {
  try {
    greedy_hitting_set({{1}, {}});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyFamily);
  }
}

TEST_CASE("greedy_hitting_set covers every family") {
  std::vector<std::vector<NodeId>> fams;
  SplitMix64 rng(11);
  for (int i = 0; i < 60; ++i) {
    std::vector<NodeId> f;
    const int sz = 1 + rng.next() % 6;
    for (int j = 0; j < sz; ++j) f.push_back(rng.next() % 40);
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    fams.push_back(std::move(f));
  }
  auto hs = greedy_hitting_set(fams);
  CHECK(std::is_sorted(hs.begin(), hs.end()));
  for (const auto& f : fams) {
    bool hit = false;
    for (NodeId x : f) hit = hit || std::binary_search(hs.begin(), hs.end(), x);
    CHECK(hit);
  }
}
