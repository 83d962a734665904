#ifndef DAPSP_SSSP_HPP
#define DAPSP_SSSP_HPP

#include <vector>

#include "dapsp/graph.hpp"
#include "dapsp/types.hpp"

namespace dapsp {

enum class Direction { FromRoot, ToRoot };

// Shortest-path tree with a hop budget. Among all minimum-weight <=h hop
// paths the stored path has the minimum hop count; remaining ties resolve to
// the smaller predecessor id, so trees are reproducible bit-for-bit.
// link points one step toward the root for ToRoot trees and to the
// predecessor (away from the root side) for FromRoot trees.
struct HopTree {
  NodeId root = kNoNode;
  Direction direction = Direction::FromRoot;
  std::uint32_t hop_limit = 0;
  std::vector<Weight> dist;
  std::vector<std::int32_t> hops;
  std::vector<NodeId> link;

  // One label per accepted relaxation. Hop-bounded paths are not prefix
  // closed: a node's final label may use more hops than the prefix some other
  // stored path needs through it, so single per-node parent pointers cannot
  // represent the stored paths. parent indexes the exact label the relaxation
  // read, which makes every chain a real <=hop_limit path of the recorded
  // weight. Parents always precede children in the vector.
  struct Label {
    NodeId node;
    std::int32_t hops;
    Weight dist;
    std::uint32_t parent;
  };
  static constexpr std::uint32_t kNoLabel = 0xffffffffu;
  std::vector<Label> labels;
  std::vector<std::uint32_t> final_label;  // per node; kNoLabel = unreachable
};

// Exact dist^h from/to root in the graph with all edges incident to excluded
// nodes removed. Bellman-Ford with exact round semantics: after round k every
// label equals dist^k. Works with negative weights.
HopTree bounded_hop_sssp(const GraphSnapshot& g, NodeId root, std::uint32_t h,
                         Direction dir, const std::vector<std::uint8_t>& excluded = {},
                         Stats* stats = nullptr);

struct EdgeRec {
  NodeId from;
  NodeId to;
  Weight w;
};

// Dijkstra over an explicit edge list spanning ids [0, n_ids). Non-negative
// weights only; hop_limit is n_ids.
HopTree dijkstra_sssp(std::uint32_t n_ids, const std::vector<EdgeRec>& edges, NodeId root,
                      Direction dir, Stats* stats = nullptr);

// Dijkstra directly on a snapshot, skipping edges incident to excluded nodes.
HopTree dijkstra_sssp(const GraphSnapshot& g, NodeId root, Direction dir,
                      const std::vector<std::uint8_t>& excluded = {}, Stats* stats = nullptr);

// Breadth-first search up to depth h; requires all weights equal to 1 and
// matches bounded_hop_sssp on the same input.
HopTree bfs_depth(const GraphSnapshot& g, NodeId root, std::uint32_t h, Direction dir,
                  const std::vector<std::uint8_t>& excluded = {}, Stats* stats = nullptr);

// Node sequence of the stored path, in travel order (root first for FromRoot
// trees, x first for ToRoot trees). Throws Unreachable when dist(x) == kInf.
std::vector<NodeId> extract_path(const HopTree& tree, NodeId x);

}  // namespace dapsp

#endif
