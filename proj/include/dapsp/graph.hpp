#ifndef DAPSP_GRAPH_HPP
#define DAPSP_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dapsp/types.hpp"

namespace dapsp {

struct Edge {
  NodeId to;  // neighbor (target for out-lists, source for in-lists)
  Weight w;
};

struct UpdateEvent {
  enum class Kind { InsertNode, DeleteNode };
  Kind kind;
  NodeId node;
  // InsertNode only; Edge::to names the other (alive) endpoint.
  std::vector<Edge> in_edges;
  std::vector<Edge> out_edges;

  static UpdateEvent del(NodeId v) { return UpdateEvent{Kind::DeleteNode, v, {}, {}}; }
  static UpdateEvent insert(NodeId v, std::vector<Edge> in, std::vector<Edge> out) {
    return UpdateEvent{Kind::InsertNode, v, std::move(in), std::move(out)};
  }
};

// Weighted directed graph with stable node identifiers. Deleted nodes become
// tombstones and their identifiers are never reused. Adjacency lists are kept
// sorted by neighbor id and mutually consistent between in- and out-sides;
// edges incident to tombstones are physically removed. Immutable after
// construction: event application returns a new snapshot.
class GraphSnapshot {
 public:
  GraphSnapshot() = default;

  // Builds from an explicit edge list; parallel edges collapse to minimum
  // weight, negative self-loops are rejected, and n * max|w| must fit in a
  // Weight with headroom factor >= 4.
  static GraphSnapshot from_edges(std::size_t n,
                                  const std::vector<std::tuple<NodeId, NodeId, Weight>>& edges);

  NodeId capacity() const { return static_cast<NodeId>(out_.size()); }
  bool alive(NodeId v) const { return v < alive_.size() && alive_[v] != 0; }
  bool ever_alive(NodeId v) const { return v < ever_.size() && ever_[v] != 0; }
  std::size_t alive_count() const { return alive_count_; }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<Edge>& out(NodeId v) const { return out_[v]; }
  const std::vector<Edge>& in(NodeId v) const { return in_[v]; }

  // Weight of edge (u,v), or kInf if absent.
  Weight edge_weight(NodeId u, NodeId v) const;
  std::size_t out_degree(NodeId v) const { return out_[v].size(); }
  std::size_t degree(NodeId v) const { return out_[v].size() + in_[v].size(); }

  GraphSnapshot apply(const UpdateEvent& e) const;

  // Copy with every edge (u,v) shifted to w + p[u] - p[v]; alive masks are
  // preserved. Throws if any shifted weight is negative.
  GraphSnapshot reweighted(const std::vector<Weight>& p) const;

  std::string serialize() const;

  // Full recount of in/out mutual consistency; throws on violation.
  void check_consistency() const;

  bool has_negative_weight() const;
  Weight max_abs_weight() const;

 private:
  void add_edge_min(NodeId u, NodeId v, Weight w);
  void validate_overflow() const;

  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<Edge>> in_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::uint8_t> ever_;
  std::size_t alive_count_ = 0;
  std::size_t edge_count_ = 0;
};

// Parses the graph file format: "n m" header, then m lines "u v w";
// '#' starts a comment line.
GraphSnapshot load_graph(std::istream& text);
GraphSnapshot load_graph(const std::string& text);

}  // namespace dapsp

#endif
