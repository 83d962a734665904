#ifndef DAPSP_TESTS_HELPERS_HPP
#define DAPSP_TESTS_HELPERS_HPP

#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "dapsp/graph.hpp"

namespace testutil {

using dapsp::GraphSnapshot;
using dapsp::NodeId;
using dapsp::Weight;

// Simple directed G(n, ~degree*n edges) with weights in [wmin, wmax].
inline GraphSnapshot random_graph(std::uint32_t n, double degree, Weight wmin, Weight wmax,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeId> node(0, n - 1);
  std::uniform_int_distribution<Weight> weight(wmin, wmax);
  std::set<std::pair<NodeId, NodeId>> used;
  std::vector<std::tuple<NodeId, NodeId, Weight>> edges;
  const auto target = static_cast<std::size_t>(degree * n);
  for (std::size_t tries = 0; edges.size() < target && tries < target * 20; ++tries) {
    const NodeId u = node(rng), v = node(rng);
    if (u == v || used.count({u, v})) continue;
    used.insert({u, v});
    edges.emplace_back(u, v, weight(rng));
  }
  return GraphSnapshot::from_edges(n, edges);
}

// Directed ring with `chords` extra random edges; produces long shortest paths.
inline GraphSnapshot ring_graph(std::uint32_t n, std::uint32_t chords, Weight w,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeId> node(0, n - 1);
  std::set<std::pair<NodeId, NodeId>> used;
  std::vector<std::tuple<NodeId, NodeId, Weight>> edges;
  for (NodeId v = 0; v < n; ++v) {
    edges.emplace_back(v, (v + 1) % n, w);
    used.insert({v, (v + 1) % n});
  }
  for (std::uint32_t k = 0; k < chords;) {
    const NodeId u = node(rng), v = node(rng);
    if (u == v || used.count({u, v})) continue;
    used.insert({u, v});
    edges.emplace_back(u, v, w);
    ++k;
  }
  return GraphSnapshot::from_edges(n, edges);
}

inline GraphSnapshot path_graph(std::uint32_t n, Weight w = 1) {
  std::vector<std::tuple<NodeId, NodeId, Weight>> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1, w);
  return GraphSnapshot::from_edges(n, edges);
}

inline GraphSnapshot complete_graph(std::uint32_t n, Weight w = 1) {
  std::vector<std::tuple<NodeId, NodeId, Weight>> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = 0; v < n; ++v)
      if (u != v) edges.emplace_back(u, v, w);
  return GraphSnapshot::from_edges(n, edges);
}

}  // namespace testutil

#endif
