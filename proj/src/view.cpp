#include "dapsp/view.hpp"

#include <queue>

namespace dapsp {

DistanceView make_view(std::vector<Weight> dist, const GraphSnapshot& current) {
  DistanceView v;
  v.n_ids = current.capacity();
  v.dist = std::move(dist);
  v.first_edge.assign(v.dist.size(), kNoNode);
  v.alive.assign(v.n_ids, 0);
  for (NodeId x = 0; x < v.n_ids; ++x) v.alive[x] = current.alive(x) ? 1 : 0;

  const std::uint32_t n = v.n_ids;
  std::vector<std::int32_t> hp(n);
  for (NodeId t = 0; t < n; ++t) {
    if (!v.alive[t]) continue;
    auto d = [&](NodeId s) { return v.dist[static_cast<std::size_t>(s) * n + t]; };
    auto fe = [&](NodeId s) -> NodeId& {
      return v.first_edge[static_cast<std::size_t>(s) * n + t];
    };
    // Layered BFS from t over reversed tight edges.
    std::fill(hp.begin(), hp.end(), -1);
    hp[t] = 0;
    std::vector<NodeId> layer{t};
    std::vector<NodeId> next;
    std::int32_t depth = 0;
    while (!layer.empty()) {
      ++depth;
      next.clear();
      for (NodeId x : layer) {
        for (const Edge& e : current.in(x)) {
          NodeId s = e.to;
          if (s == t || d(s) == kInf || d(x) == kInf) continue;
          if (sat_add(e.w, d(x)) != d(s)) continue;
          if (hp[s] == -1) {
            hp[s] = depth;
            fe(s) = x;
            next.push_back(s);
          } else if (hp[s] == depth && x < fe(s)) {
            fe(s) = x;  // same remaining hop count, smaller successor id
          }
        }
      }
      layer.swap(next);
    }
  }
  return v;
}

std::vector<NodeId> walk_path(const DistanceView& view, NodeId s, NodeId t) {
  if (!view.node_alive(s) || !view.node_alive(t))
    throw Error(Errc::DeadEndpoint, "path endpoint not alive");
  if (view.at(s, t) == kInf) throw Error(Errc::PathUnavailable, "no path");
  std::vector<NodeId> path{s};
  NodeId cur = s;
  while (cur != t) {
    NodeId nxt = view.first_at(cur, t);
    if (nxt == kNoNode || path.size() > view.n_ids)
      throw Error(Errc::PathUnavailable, "distance not witnessed by a path");
    path.push_back(nxt);
    cur = nxt;
  }
  return path;
}

}  // namespace dapsp
