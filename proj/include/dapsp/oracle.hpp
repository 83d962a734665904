#ifndef DAPSP_ORACLE_HPP
#define DAPSP_ORACLE_HPP

#include <vector>

#include "dapsp/graph.hpp"
#include "dapsp/types.hpp"

// Brute-force references. Matrix relaxation on purpose: no code shared with
// the queue-based kernels under test.

namespace dapsp {

struct OracleResult {
  std::uint32_t n = 0;
  std::vector<Weight> dist;        // n*n, row s, column t
  std::vector<std::int32_t> hops;  // minimum edge count among min-weight paths, -1 if none
  bool negative_cycle = false;

  Weight at(NodeId s, NodeId t) const { return dist[static_cast<std::size_t>(s) * n + t]; }
  std::int32_t hops_at(NodeId s, NodeId t) const {
    return hops[static_cast<std::size_t>(s) * n + t];
  }
};

// Floyd-Warshall over alive nodes with (weight, hops) lexicographic
// relaxation; negative_cycle set when any dist(v,v) < 0.
OracleResult apsp_oracle(const GraphSnapshot& g);

// dist^h and minimal hop counts by h rounds of one-edge matrix relaxation.
OracleResult hop_oracle(const GraphSnapshot& g, std::uint32_t h);

}  // namespace dapsp

#endif
