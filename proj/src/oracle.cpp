#include "dapsp/oracle.hpp"

namespace dapsp {

namespace {

OracleResult identity(const GraphSnapshot& g) {
  OracleResult r;
  r.n = g.capacity();
  r.dist.assign(static_cast<std::size_t>(r.n) * r.n, kInf);
  r.hops.assign(static_cast<std::size_t>(r.n) * r.n, -1);
  for (NodeId v = 0; v < r.n; ++v) {
    if (!g.alive(v)) continue;
    r.dist[static_cast<std::size_t>(v) * r.n + v] = 0;
    r.hops[static_cast<std::size_t>(v) * r.n + v] = 0;
  }
  return r;
}

inline bool lex_less(Weight d1, std::int32_t h1, Weight d2, std::int32_t h2) {
  if (d1 != d2) return d1 < d2;
  return h1 < h2;
}

}  // namespace

OracleResult apsp_oracle(const GraphSnapshot& g) {
  OracleResult r = identity(g);
  const std::uint32_t n = r.n;
  auto idx = [n](NodeId s, NodeId t) { return static_cast<std::size_t>(s) * n + t; };
  for (NodeId u = 0; u < n; ++u)
    for (const Edge& e : g.out(u))
      if (lex_less(e.w, 1, r.dist[idx(u, e.to)], r.hops[idx(u, e.to)])) {
        r.dist[idx(u, e.to)] = e.w;
        r.hops[idx(u, e.to)] = 1;
      }
  for (NodeId k = 0; k < n; ++k) {
    if (!g.alive(k)) continue;
    for (NodeId s = 0; s < n; ++s) {
      Weight dsk = r.dist[idx(s, k)];
      if (dsk == kInf) continue;
      std::int32_t hsk = r.hops[idx(s, k)];
      for (NodeId t = 0; t < n; ++t) {
        Weight dkt = r.dist[idx(k, t)];
        if (dkt == kInf) continue;
        Weight cand = sat_add(dsk, dkt);
        std::int32_t ch = hsk + r.hops[idx(k, t)];
        if (lex_less(cand, ch, r.dist[idx(s, t)], r.hops[idx(s, t)])) {
          r.dist[idx(s, t)] = cand;
          r.hops[idx(s, t)] = ch;
        }
      }
    }
  }
  for (NodeId v = 0; v < n; ++v)
    if (g.alive(v) && r.dist[idx(v, v)] < 0) r.negative_cycle = true;
  return r;
}

OracleResult hop_oracle(const GraphSnapshot& g, std::uint32_t h) {
  OracleResult r = identity(g);
  const std::uint32_t n = r.n;
  auto idx = [n](NodeId s, NodeId t) { return static_cast<std::size_t>(s) * n + t; };
  for (std::uint32_t round = 0; round < h; ++round) {
    OracleResult next = r;
    bool changed = false;
    for (NodeId u = 0; u < n; ++u) {
      for (const Edge& e : g.out(u)) {
        for (NodeId s = 0; s < n; ++s) {
          Weight dsu = r.dist[idx(s, u)];
          if (dsu == kInf) continue;
          Weight cand = sat_add(dsu, e.w);
          std::int32_t ch = r.hops[idx(s, u)] + 1;
          if (lex_less(cand, ch, next.dist[idx(s, e.to)], next.hops[idx(s, e.to)])) {
            next.dist[idx(s, e.to)] = cand;
            next.hops[idx(s, e.to)] = ch;
            changed = true;
          }
        }
      }
    }
    r = std::move(next);
    if (!changed) break;
  }
  return r;
}

}  // namespace dapsp
