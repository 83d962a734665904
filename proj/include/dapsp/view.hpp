#ifndef DAPSP_VIEW_HPP
#define DAPSP_VIEW_HPP

#include <vector>

#include "dapsp/graph.hpp"
#include "dapsp/types.hpp"

namespace dapsp {

// Dense distance matrix over the identifier space plus a first-edge matrix
// for path extraction. first_edge(s,t) is the successor of s on a shortest
// s->t path witnessing dist(s,t); walking it strictly decreases the hop
// count, so extraction terminates in at most n steps.
struct DistanceView {
  std::uint32_t n_ids = 0;
  std::vector<Weight> dist;
  std::vector<NodeId> first_edge;
  std::vector<std::uint8_t> alive;

  Weight at(NodeId s, NodeId t) const { return dist[static_cast<std::size_t>(s) * n_ids + t]; }
  NodeId first_at(NodeId s, NodeId t) const {
    return first_edge[static_cast<std::size_t>(s) * n_ids + t];
  }
  bool node_alive(NodeId v) const { return v < n_ids && alive[v] != 0; }
};

// Wraps a computed distance matrix and derives the first-edge matrix from it:
// for each target t, a breadth-first pass over the tight edges
// (w(s,x) + dist(x,t) == dist(s,t)) assigns every source its successor,
// preferring fewer remaining hops and then the smaller successor id. Entries
// whose value is not witnessed by any tight decomposition get no first edge,
// so a bogus matrix entry surfaces as an extraction failure instead of a
// fabricated path.
DistanceView make_view(std::vector<Weight> dist, const GraphSnapshot& current);

// Walks first_edge from s to t. Throws DeadEndpoint for non-alive endpoints
// and PathUnavailable when dist(s,t) == kInf or no witnessed path exists.
std::vector<NodeId> walk_path(const DistanceView& view, NodeId s, NodeId t);

}  // namespace dapsp

#endif
