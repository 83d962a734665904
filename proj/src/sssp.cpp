#include "dapsp/sssp.hpp"

#include <algorithm>
#include <queue>

namespace dapsp {

namespace {

inline bool is_excluded(const std::vector<std::uint8_t>& excluded, NodeId v) {
  return v < excluded.size() && excluded[v] != 0;
}

// Lexicographic label order: (weight, hops, predecessor id).
inline bool label_better(Weight d, std::int32_t h, NodeId pred, Weight od, std::int32_t oh,
                         NodeId opred) {
  if (d != od) return d < od;
  if (h != oh) return h < oh;
  return pred < opred;
}

HopTree make_tree(NodeId root, Direction dir, std::uint32_t h, std::uint32_t n) {
  HopTree t;
  t.root = root;
  t.direction = dir;
  t.hop_limit = h;
  t.dist.assign(n, kInf);
  t.hops.assign(n, -1);
  t.link.assign(n, kNoNode);
  t.dist[root] = 0;
  t.hops[root] = 0;
  t.final_label.assign(n, HopTree::kNoLabel);
  t.labels.push_back({root, 0, 0, HopTree::kNoLabel});
  t.final_label[root] = 0;
  return t;
}

// For producers whose link pointers already form a consistent tree (Dijkstra,
// BFS): one label per reachable node, parents first by hop count.
void labels_from_links(HopTree& t) {
  const std::uint32_t n = static_cast<std::uint32_t>(t.dist.size());
  std::vector<NodeId> order;
  for (NodeId v = 0; v < n; ++v)
    if (v != t.root && t.dist[v] != kInf) order.push_back(v);
  std::sort(order.begin(), order.end(),
            [&](NodeId a, NodeId b) { return t.hops[a] < t.hops[b]; });
  for (NodeId v : order) {
    t.labels.push_back({v, t.hops[v], t.dist[v], t.final_label[t.link[v]]});
    t.final_label[v] = static_cast<std::uint32_t>(t.labels.size() - 1);
  }
}

}  // namespace

HopTree bounded_hop_sssp(const GraphSnapshot& g, NodeId root, std::uint32_t h, Direction dir,
                         const std::vector<std::uint8_t>& excluded, Stats* stats) {
  if (root >= g.capacity() || !g.alive(root)) throw Error(Errc::RootDead, "root not alive");
  if (is_excluded(excluded, root)) throw Error(Errc::RootExcluded, "root excluded");
  const std::uint32_t n = g.capacity();
  HopTree cur = make_tree(root, dir, h, n);

  std::vector<NodeId> frontier{root};
  std::vector<std::uint8_t> in_next(n, 0);
  std::vector<NodeId> next_frontier;

  // Round k relaxes from the round-(k-1) labels only, so after round k every
  // label equals dist^k with minimum hops.
  for (std::uint32_t round = 0; round < h && !frontier.empty(); ++round) {
    std::vector<Weight> prev_dist;
    std::vector<std::int32_t> prev_hops;
    std::vector<std::uint32_t> prev_label;
    prev_dist.reserve(frontier.size());
    prev_hops.reserve(frontier.size());
    prev_label.reserve(frontier.size());
    for (NodeId u : frontier) {
      prev_dist.push_back(cur.dist[u]);
      prev_hops.push_back(cur.hops[u]);
      prev_label.push_back(cur.final_label[u]);
    }
    next_frontier.clear();
    for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
      NodeId u = frontier[fi];
      const Weight du = prev_dist[fi];
      const std::int32_t hu = prev_hops[fi];
      const auto& adj = (dir == Direction::FromRoot) ? g.out(u) : g.in(u);
      for (const Edge& e : adj) {
        if (is_excluded(excluded, e.to)) continue;
        if (stats) ++stats->relaxations;
        Weight nd = sat_add(du, e.w);
        std::int32_t nh = hu + 1;
        if (label_better(nd, nh, u, cur.dist[e.to], cur.hops[e.to], cur.link[e.to])) {
          cur.dist[e.to] = nd;
          cur.hops[e.to] = nh;
          cur.link[e.to] = u;
          cur.labels.push_back({e.to, nh, nd, prev_label[fi]});
          cur.final_label[e.to] = static_cast<std::uint32_t>(cur.labels.size() - 1);
          if (!in_next[e.to]) {
            in_next[e.to] = 1;
            next_frontier.push_back(e.to);
          }
        }
      }
    }
    frontier.swap(next_frontier);
    for (NodeId v : frontier) in_next[v] = 0;
  }
  return cur;
}

namespace {

HopTree dijkstra_adj(std::uint32_t n, NodeId root,
                     const std::vector<std::vector<Edge>>& adj, Direction dir, Stats* stats) {
  HopTree t = make_tree(root, dir, n, n);
  // (dist, hops, node): deterministic settle order.
  using Key = std::tuple<Weight, std::int32_t, NodeId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> pq;
  std::vector<std::uint8_t> settled(n, 0);
  pq.emplace(0, 0, root);
  while (!pq.empty()) {
    auto [d, h, u] = pq.top();
    pq.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    for (const Edge& e : adj[u]) {
      if (settled[e.to]) continue;
      if (stats) ++stats->relaxations;
      Weight nd = sat_add(d, e.w);
      std::int32_t nh = h + 1;
      if (label_better(nd, nh, u, t.dist[e.to], t.hops[e.to], t.link[e.to])) {
        t.dist[e.to] = nd;
        t.hops[e.to] = nh;
        t.link[e.to] = u;
        pq.emplace(nd, nh, e.to);
      }
    }
  }
  labels_from_links(t);
  return t;
}

}  // namespace

HopTree dijkstra_sssp(std::uint32_t n_ids, const std::vector<EdgeRec>& edges, NodeId root,
                      Direction dir, Stats* stats) {
  std::vector<std::vector<Edge>> adj(n_ids);
  for (const EdgeRec& e : edges) {
    if (e.w < 0) throw Error(Errc::NegativeEdge, "negative weight in Dijkstra input");
    if (dir == Direction::FromRoot)
      adj[e.from].push_back(Edge{e.to, e.w});
    else
      adj[e.to].push_back(Edge{e.from, e.w});
  }
  return dijkstra_adj(n_ids, root, adj, dir, stats);
}

HopTree dijkstra_sssp(const GraphSnapshot& g, NodeId root, Direction dir,
                      const std::vector<std::uint8_t>& excluded, Stats* stats) {
  if (!g.alive(root)) throw Error(Errc::RootDead, "root not alive");
  if (is_excluded(excluded, root)) throw Error(Errc::RootExcluded, "root excluded");
  const std::uint32_t n = g.capacity();
  std::vector<std::vector<Edge>> adj(n);
  for (NodeId u = 0; u < n; ++u) {
    if (is_excluded(excluded, u) || !g.alive(u)) continue;
    for (const Edge& e : g.out(u)) {
      if (e.w < 0) throw Error(Errc::NegativeEdge, "negative weight in Dijkstra input");
      if (is_excluded(excluded, e.to)) continue;
      if (dir == Direction::FromRoot)
        adj[u].push_back(Edge{e.to, e.w});
      else
        adj[e.to].push_back(Edge{u, e.w});
    }
  }
  return dijkstra_adj(n, root, adj, dir, stats);
}

HopTree bfs_depth(const GraphSnapshot& g, NodeId root, std::uint32_t h, Direction dir,
                  const std::vector<std::uint8_t>& excluded, Stats* stats) {
  for (NodeId u = 0; u < g.capacity(); ++u)
    for (const Edge& e : g.out(u))
      if (e.w != 1) throw Error(Errc::WeightedInput, "bfs_depth requires unit weights");
  if (root >= g.capacity() || !g.alive(root)) throw Error(Errc::RootDead, "root not alive");
  if (is_excluded(excluded, root)) throw Error(Errc::RootExcluded, "root excluded");
  const std::uint32_t n = g.capacity();
  HopTree t = make_tree(root, dir, h, n);
  std::vector<NodeId> frontier{root};
  std::vector<NodeId> next;
  for (std::uint32_t depth = 1; depth <= h && !frontier.empty(); ++depth) {
    next.clear();
    for (NodeId u : frontier) {
      const auto& adj = (dir == Direction::FromRoot) ? g.out(u) : g.in(u);
      for (const Edge& e : adj) {
        if (is_excluded(excluded, e.to)) continue;
        if (stats) ++stats->relaxations;
        if (t.dist[e.to] == kInf) {
          t.dist[e.to] = depth;
          t.hops[e.to] = static_cast<std::int32_t>(depth);
          t.link[e.to] = u;
          next.push_back(e.to);
        } else if (t.hops[e.to] == static_cast<std::int32_t>(depth) && u < t.link[e.to]) {
          t.link[e.to] = u;  // smaller predecessor id on equal depth
        }
      }
    }
    frontier.swap(next);
  }
  labels_from_links(t);
  return t;
}

std::vector<NodeId> extract_path(const HopTree& tree, NodeId x) {
  if (x >= tree.dist.size() || tree.dist[x] == kInf)
    throw Error(Errc::Unreachable, "no stored path");
  std::vector<NodeId> seq;
  for (std::uint32_t i = tree.final_label[x]; i != HopTree::kNoLabel; i = tree.labels[i].parent)
    seq.push_back(tree.labels[i].node);
  if (tree.direction == Direction::FromRoot) std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace dapsp
