#include "dapsp/decremental.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstring>
#include <numeric>

namespace dapsp {

namespace {

constexpr std::uint32_t kListChunkRows = 16;

std::vector<std::pair<std::uint32_t, std::uint32_t>> default_levels(std::uint32_t alive_n) {
  std::uint32_t top = 1;
  while ((1ull << top) < alive_n) ++top;  // top = max(1, ceil(log2 n))
  std::vector<std::pair<std::uint32_t, std::uint32_t>> lv;
  for (std::uint32_t i = 1; i <= top; ++i) lv.push_back({i, 1u << i});
  return lv;
}

std::uint32_t auto_list_max_level(std::uint32_t alive_n) {
  // Serving caps h at sqrt(n) (|D| >= 1), so only levels up to
  // ceil(log2 ceil(sqrt(n))) ever need candidate lists.
  std::uint32_t root = static_cast<std::uint32_t>(std::ceil(std::sqrt(static_cast<double>(std::max<std::uint32_t>(alive_n, 1)))));
  std::uint32_t lm = 1;
  while ((1u << lm) < root) ++lm;
  return lm;
}

}  // namespace

Preprocessor::Preprocessor(GraphSnapshot g, BuildConfig cfg, Stats* stats) : stats_(stats) {
  for (NodeId u = 0; u < g.capacity(); ++u)
    for (const Edge& e : g.out(u))
      if (e.w < 0) throw Error(Errc::NegativeWeight, "preprocess: negative edge weight");

  out_.snapshot = std::move(g);
  out_.n_ids = out_.snapshot.capacity();
  out_.potentials.assign(out_.n_ids, 0);
  for (NodeId v = 0; v < out_.n_ids; ++v)
    if (out_.snapshot.alive(v)) alive_nodes_.push_back(v);
  out_.alive_n = static_cast<std::uint32_t>(alive_nodes_.size());

  if (cfg.levels.empty()) cfg.levels = default_levels(std::max<std::uint32_t>(out_.alive_n, 1));
  if (cfg.list_max_level == 0) cfg.list_max_level = auto_list_max_level(out_.alive_n);
  out_.cfg = cfg;

  SamplerConfig sc;
  sc.confidence = cfg.confidence;
  sc.seed = cfg.seed;
  sc.n = std::max<std::uint32_t>(out_.alive_n, 1);

  const std::size_t pairs = static_cast<std::size_t>(out_.n_ids) * out_.n_ids;
  out_.layers.resize(cfg.levels.size());
  plans_.resize(cfg.levels.size());
  for (std::size_t li = 0; li < cfg.levels.size(); ++li) {
    LayerStructure& L = out_.layers[li];
    L.level = cfg.levels[li].first;
    L.hop_bound = cfg.levels[li].second;
    L.is_center.assign(out_.n_ids, 0);
    L.rank_of.assign(out_.n_ids, LayerStructure::kNoRank);
    L.congestion.assign(out_.n_ids, 0);
    L.level_min.assign(pairs, kInf);
    if (cfg.deterministic) {
      L.centers = alive_nodes_;  // every node gets visited; no sampling
    } else {
      L.centers = sample_centers(sc, L.hop_bound, alive_nodes_, L.level);
    }
    for (NodeId c : L.centers) L.is_center[c] = 1;
    L.lists_materialized = !cfg.deterministic && L.level <= cfg.list_max_level;

    LayerPlan& P = plans_[li];
    P.visited.assign(out_.n_ids, 0);
    const std::uint32_t nc = static_cast<std::uint32_t>(L.centers.size());
    P.center_visits_left = nc;
    P.planned_visits = cfg.deterministic ? out_.alive_n : nc + std::min(nc, out_.alive_n - nc);
    P.next_is_center = !cfg.deterministic;
    L.visit_order.reserve(P.planned_visits);
    L.to_trees.reserve(P.planned_visits);
    L.from_trees.reserve(P.planned_visits);
    if (L.lists_materialized && P.planned_visits > 0)
      P.list_chunks = (out_.n_ids + kListChunkRows - 1) / kListChunkRows;
    total_units_ += P.planned_visits + P.list_chunks;
  }
  stamp_.assign(out_.n_ids, 0);
}

bool Preprocessor::done() const { return units_done_ >= total_units_; }

NodeId Preprocessor::pick_next(std::uint32_t li) const {
  const LayerStructure& L = out_.layers[li];
  const LayerPlan& P = plans_[li];
  // Deterministic mode takes the global congestion argmax; otherwise
  // alternate between the most congested unvisited center and non-center.
  const int want_center = out_.cfg.deterministic ? -1 : (P.next_is_center ? 1 : 0);
  NodeId best = kNoNode;
  for (NodeId v : alive_nodes_) {
    if (P.visited[v]) continue;
    if (want_center >= 0 && static_cast<int>(L.is_center[v]) != want_center) continue;
    if (best == kNoNode || L.congestion[v] > L.congestion[best]) best = v;
  }
  return best;
}

void Preprocessor::do_visit(std::uint32_t li, NodeId v) {
  LayerStructure& L = out_.layers[li];
  LayerPlan& P = plans_[li];
  if (v >= out_.n_ids || !out_.snapshot.alive(v))
    throw Error(Errc::RootDead, "visit: node not alive");
  if (P.visited[v]) throw Error(Errc::AlreadyVisited, "visit: node already visited at this level");

  HopTree to, from;
  if (out_.cfg.unweighted) {
    to = bfs_depth(out_.snapshot, v, L.hop_bound, Direction::ToRoot, P.visited, stats_);
    from = bfs_depth(out_.snapshot, v, L.hop_bound, Direction::FromRoot, P.visited, stats_);
  } else {
    to = bounded_hop_sssp(out_.snapshot, v, L.hop_bound, Direction::ToRoot, P.visited, stats_);
    from = bounded_hop_sssp(out_.snapshot, v, L.hop_bound, Direction::FromRoot, P.visited, stats_);
  }

  // Congestion: each node x charges every unvisited node on its stored
  // paths pi(x,v) and pi(v,x), but at most once per x.
  for (NodeId x = 0; x < out_.n_ids; ++x) {
    const bool in_to = to.dist[x] < kInf;
    const bool in_from = from.dist[x] < kInf;
    if (!in_to && !in_from) continue;
    ++stamp_ctr_;
    if (in_to)
      for (std::uint32_t i = to.final_label[x]; i != HopTree::kNoLabel; i = to.labels[i].parent) {
        const NodeId u = to.labels[i].node;
        if (u != v && !P.visited[u] && stamp_[u] != stamp_ctr_) {
          stamp_[u] = stamp_ctr_;
          ++L.congestion[u];
        }
      }
    if (in_from)
      for (std::uint32_t i = from.final_label[x]; i != HopTree::kNoLabel;
           i = from.labels[i].parent) {
        const NodeId u = from.labels[i].node;
        if (u != v && !P.visited[u] && stamp_[u] != stamp_ctr_) {
          stamp_[u] = stamp_ctr_;
          ++L.congestion[u];
        }
      }
  }

  // Fold delta_i(s, v, t) into the level minimum; iterate finite entries only.
  std::vector<NodeId> srcs, dsts;
  for (NodeId x = 0; x < out_.n_ids; ++x) {
    if (to.dist[x] < kInf) srcs.push_back(x);
    if (from.dist[x] < kInf) dsts.push_back(x);
  }
  for (NodeId s : srcs) {
    Weight* row = out_.layers[li].level_min.data() + static_cast<std::size_t>(s) * out_.n_ids;
    const Weight ds = to.dist[s];
    for (NodeId t : dsts) {
      const Weight cand = sat_add(ds, from.dist[t]);
      if (cand < row[t]) row[t] = cand;
    }
  }

  const std::uint32_t rank = static_cast<std::uint32_t>(L.visit_order.size());
  L.visit_order.push_back(v);
  L.rank_of[v] = rank;
  L.to_trees.push_back(std::move(to));
  L.from_trees.push_back(std::move(from));
  P.visited[v] = 1;
  ++P.visits_done;
  if (L.is_center[v]) {
    --P.center_visits_left;
    // After a center: serve a non-center next if one remains to be scheduled.
    if (!out_.cfg.deterministic)
      P.next_is_center = (P.visits_done + P.center_visits_left >= P.planned_visits);
  } else {
    P.next_is_center = true;
  }
}

void Preprocessor::do_list_chunk(std::uint32_t li) {
  LayerStructure& L = out_.layers[li];
  LayerPlan& P = plans_[li];
  const std::uint32_t n = out_.n_ids;
  const std::size_t nr = L.visit_order.size();
  if (L.cand.empty()) L.cand.assign(static_cast<std::size_t>(n) * n * nr, 0);

  const NodeId s0 = P.chunks_done * kListChunkRows;
  const NodeId s1 = std::min<NodeId>(s0 + kListChunkRows, n);
  std::vector<Weight> key_to(nr), key(nr);
  std::vector<std::uint16_t> order(nr);
  for (NodeId s = s0; s < s1; ++s) {
    for (std::size_t r = 0; r < nr; ++r) key_to[r] = L.to_trees[r].dist[s];
    for (NodeId t = 0; t < n; ++t) {
      for (std::size_t r = 0; r < nr; ++r) key[r] = sat_add(key_to[r], L.from_trees[r].dist[t]);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::uint16_t a, std::uint16_t b) {
        if (key[a] != key[b]) return key[a] < key[b];
        return a < b;
      });
      std::uint16_t* row = L.cand.data() + (static_cast<std::size_t>(s) * n + t) * nr;
      std::copy(order.begin(), order.end(), row);
    }
  }
  ++P.chunks_done;
}

void Preprocessor::step() {
  if (done()) return;
  while (cur_layer_ < plans_.size()) {
    LayerPlan& P = plans_[cur_layer_];
    if (P.visits_done < P.planned_visits) {
      NodeId v = pick_next(cur_layer_);
      if (v == kNoNode) {  // alternation exhausted one side early
        P.next_is_center = !P.next_is_center;
        v = pick_next(cur_layer_);
      }
      if (v == kNoNode)
        throw Error(Errc::InternalInconsistency, "preprocess: no unvisited node left");
      do_visit(cur_layer_, v);
      ++units_done_;
      return;
    }
    if (P.chunks_done < P.list_chunks) {
      do_list_chunk(cur_layer_);
      ++units_done_;
      return;
    }
    ++cur_layer_;
  }
  // Out-of-schedule visits can leave the unit counter short of the estimate.
  units_done_ = total_units_;
}

void Preprocessor::run_to_completion() {
  while (!done()) step();
}

void Preprocessor::visit(std::uint32_t layer_index, NodeId v) {
  if (layer_index >= out_.layers.size())
    throw Error(Errc::InternalInconsistency, "visit: no such level");
  do_visit(layer_index, v);
}

DecrementalStructure Preprocessor::take() {
  if (!done()) run_to_completion();
  const std::uint32_t n = out_.n_ids;
  out_.base_dist.assign(static_cast<std::size_t>(n) * n, kInf);
  for (const LayerStructure& L : out_.layers)
    for (std::size_t p = 0; p < out_.base_dist.size(); ++p)
      if (L.level_min[p] < out_.base_dist[p]) out_.base_dist[p] = L.level_min[p];
  for (NodeId v = 0; v < n; ++v)
    if (out_.snapshot.alive(v)) out_.base_dist[static_cast<std::size_t>(v) * n + v] = 0;
  return std::move(out_);
}

DecrementalStructure preprocess(const GraphSnapshot& g, const BuildConfig& cfg, Stats* stats) {
  Preprocessor p(g, cfg, stats);
  p.run_to_completion();
  return p.take();
}

DecrementalStructure preprocess_det(const GraphSnapshot& g, std::uint32_t h, Stats* stats) {
  BuildConfig cfg;
  cfg.deterministic = true;
  cfg.levels = {{1, h}};
  return preprocess(g, cfg, stats);
}

// ---------------------------------------------------------------------------
// Serving deletions

namespace {

// Label-level contamination: a label is dirty when its node is deleted or its
// parent label is dirty (parents precede children in the vector). The node
// mask is taken from the final labels; every label on an unaffected node's
// stored path is clean by construction.
std::vector<std::uint8_t> contaminate(const HopTree& tree, const std::vector<std::uint8_t>& dmask,
                                      std::vector<std::uint8_t>& out) {
  std::vector<std::uint8_t> dirty(tree.labels.size(), 0);
  for (std::size_t i = 0; i < tree.labels.size(); ++i) {
    const HopTree::Label& lb = tree.labels[i];
    dirty[i] = dmask[lb.node] || (lb.parent != HopTree::kNoLabel && dirty[lb.parent]);
  }
  for (NodeId x = 0; x < out.size(); ++x)
    if (tree.final_label[x] != HopTree::kNoLabel && dirty[tree.final_label[x]]) out[x] = 1;
  return dirty;
}

struct SketchBuild {
  std::vector<EdgeRec> edges;
  std::size_t edge_count = 0;
};

// H_i^v: affected nodes keep all incident edges of G_i^v minus D; clean label
// chains contribute single path edges, so every unaffected node's stored path
// survives edge by edge.
SketchBuild build_sketch(const GraphSnapshot& g, const LayerStructure& L, std::uint32_t rank,
                         const std::vector<std::uint8_t>& dmask,
                         const std::vector<std::uint8_t>& affected,
                         const std::vector<std::uint8_t>& dirty_to,
                         const std::vector<std::uint8_t>& dirty_from) {
  const HopTree& to = L.to_trees[rank];
  const HopTree& from = L.from_trees[rank];
  auto in_subgraph = [&](NodeId x) {
    return g.alive(x) && !dmask[x] && !(L.rank_of[x] < rank);
  };
  SketchBuild sk;
  for (NodeId u = 0; u < g.capacity(); ++u) {
    if (!in_subgraph(u) || !affected[u]) continue;
    for (const Edge& e : g.out(u))
      if (in_subgraph(e.to)) sk.edges.push_back({u, e.to, e.w});
    for (const Edge& e : g.in(u))
      if (in_subgraph(e.to) && !affected[e.to])  // else added as e.to's out-edge
        sk.edges.push_back({e.to, u, e.w});
  }
  // Affected nodes already carry their full neighborhoods; other labels add
  // the exact edge their relaxation used.
  for (std::size_t i = 0; i < to.labels.size(); ++i) {
    const HopTree::Label& lb = to.labels[i];
    if (dirty_to[i] || lb.parent == HopTree::kNoLabel || affected[lb.node]) continue;
    const HopTree::Label& pa = to.labels[lb.parent];
    sk.edges.push_back({lb.node, pa.node, lb.dist - pa.dist});
  }
  for (std::size_t i = 0; i < from.labels.size(); ++i) {
    const HopTree::Label& lb = from.labels[i];
    if (dirty_from[i] || lb.parent == HopTree::kNoLabel || affected[lb.node]) continue;
    const HopTree::Label& pa = from.labels[lb.parent];
    sk.edges.push_back({pa.node, lb.node, lb.dist - pa.dist});
  }
  sk.edge_count = sk.edges.size();
  return sk;
}

}  // namespace

LevelScratch serve_level_scratch(const DecrementalStructure& ds, const LayerStructure& layer,
                                 const std::vector<std::uint8_t>& dmask,
                                 std::vector<HopTree>* scr_to_trees,
                                 std::vector<HopTree>* scr_from_trees, Stats* stats) {
  const std::uint32_t n = ds.n_ids;
  const std::size_t nr = layer.visit_order.size();
  LevelScratch sc;
  sc.affected.resize(nr);
  sc.scr_to.resize(nr);
  sc.scr_from.resize(nr);
  if (scr_to_trees) scr_to_trees->resize(nr);
  if (scr_from_trees) scr_from_trees->resize(nr);

  for (std::uint32_t r = 0; r < nr; ++r) {
    const NodeId v = layer.visit_order[r];
    const HopTree& to = layer.to_trees[r];
    const HopTree& from = layer.from_trees[r];
    if (dmask[v]) {
      // Every stored path through v is gone.
      std::vector<std::uint8_t> aff(n, 0);
      bool any = false;
      for (NodeId x = 0; x < n; ++x)
        if (to.dist[x] < kInf || from.dist[x] < kInf) aff[x] = 1, any = true;
      if (any) {
        sc.affected[r] = std::move(aff);
        sc.scr_to[r].assign(n, kInf);
        sc.scr_from[r].assign(n, kInf);
      }
      continue;
    }
    std::vector<std::uint8_t> aff(n, 0);
    std::vector<std::uint8_t> dirty_to = contaminate(to, dmask, aff);
    std::vector<std::uint8_t> aff_from(n, 0);
    std::vector<std::uint8_t> dirty_from = contaminate(from, dmask, aff_from);
    bool any = false;
    for (NodeId x = 0; x < n; ++x) {
      if (aff_from[x]) aff[x] = 1;
      if (aff[x]) any = true;
    }
    if (!any) continue;

    SketchBuild sk = build_sketch(ds.snapshot, layer, r, dmask, aff, dirty_to, dirty_from);
    if (stats) {
      stats->sketch_edges += sk.edge_count;
      for (NodeId x = 0; x < n; ++x) stats->affected_nodes += aff[x] ? 1 : 0;
    }
    HopTree st = dijkstra_sssp(n, sk.edges, v, Direction::ToRoot, stats);
    HopTree sf = dijkstra_sssp(n, sk.edges, v, Direction::FromRoot, stats);
    sc.scr_to[r] = st.dist;
    sc.scr_from[r] = sf.dist;
    sc.affected[r] = std::move(aff);
    if (scr_to_trees) (*scr_to_trees)[r] = std::move(st);
    if (scr_from_trees) (*scr_from_trees)[r] = std::move(sf);
  }
  return sc;
}

Weight min_delta_query(const LayerStructure& layer, NodeId s, NodeId t,
                       const LevelScratch& scratch, std::uint32_t n_ids) {
  const std::size_t nr = layer.visit_order.size();
  Weight best = kInf;
  // Changed triples: v with s or t affected; affected endpoints read the
  // repaired value, untouched endpoints keep the stored one.
  for (std::uint32_t r = 0; r < nr; ++r) {
    if (scratch.affected[r].empty()) continue;
    const bool as = scratch.affected[r][s] != 0;
    const bool at = scratch.affected[r][t] != 0;
    if (!as && !at) continue;
    const Weight dl = as ? scratch.scr_to[r][s] : layer.to_trees[r].dist[s];
    const Weight dr = at ? scratch.scr_from[r][t] : layer.from_trees[r].dist[t];
    const Weight cand = sat_add(dl, dr);
    if (cand < best) best = cand;
  }
  // First candidate-list entry untouched at both ends.
  if (layer.lists_materialized) {
    const std::uint16_t* row = layer.cand_row(s, t, n_ids);
    for (std::size_t k = 0; k < nr; ++k) {
      const std::uint32_t r = row[k];
      if (!scratch.rank_affects(r, s) && !scratch.rank_affects(r, t)) {
        const Weight cand = layer.delta_pre(s, r, t);
        if (cand < best) best = cand;
        break;
      }
    }
  } else {
    for (std::uint32_t r = 0; r < nr; ++r) {
      if (scratch.rank_affects(r, s) || scratch.rank_affects(r, t)) continue;
      const Weight cand = layer.delta_pre(s, r, t);
      if (cand < best) best = cand;
    }
  }
  return best;
}

void serve_level_accumulate(const DecrementalStructure& ds, const LayerStructure& layer,
                            const std::vector<std::uint8_t>& dmask, std::vector<Weight>& result,
                            Stats* stats) {
  const std::uint32_t n = ds.n_ids;
  LevelScratch sc = serve_level_scratch(ds, layer, dmask, nullptr, nullptr, stats);

  bool any = false;
  for (const auto& a : sc.affected)
    if (!a.empty()) any = true;
  if (!any) {
    for (std::size_t p = 0; p < result.size(); ++p)
      if (layer.level_min[p] < result[p]) result[p] = layer.level_min[p];
    return;
  }

  const std::size_t nr = layer.visit_order.size();
  std::vector<Weight> chg(static_cast<std::size_t>(n) * n, kInf);
  std::vector<NodeId> ul;
  for (std::uint32_t r = 0; r < nr; ++r) {
    if (sc.affected[r].empty()) continue;
    const std::vector<std::uint8_t>& aff = sc.affected[r];
    const std::vector<Weight>& sto = sc.scr_to[r];
    const std::vector<Weight>& sfr = sc.scr_from[r];
    const HopTree& to = layer.to_trees[r];
    const HopTree& from = layer.from_trees[r];
    ul.clear();
    for (NodeId x = 0; x < n; ++x)
      if (aff[x]) ul.push_back(x);
    for (NodeId s : ul) {
      const Weight dl = sto[s];
      if (dl >= kInf) continue;
      Weight* row = chg.data() + static_cast<std::size_t>(s) * n;
      for (NodeId t = 0; t < n; ++t) {
        const Weight dr = aff[t] ? sfr[t] : from.dist[t];
        const Weight cand = sat_add(dl, dr);
        if (cand < row[t]) row[t] = cand;
      }
    }
    for (NodeId t : ul) {
      const Weight dr = sfr[t];
      if (dr >= kInf) continue;
      for (NodeId s = 0; s < n; ++s) {
        if (aff[s]) continue;  // handled above
        const Weight dl = to.dist[s];
        if (dl >= kInf) continue;
        const Weight cand = sat_add(dl, dr);
        Weight& cell = chg[static_cast<std::size_t>(s) * n + t];
        if (cand < cell) cell = cand;
      }
    }
  }

  // Per pair: changed minima vs the first untouched candidate entry.
  std::vector<std::uint32_t> aff_ranks;
  for (std::uint32_t r = 0; r < nr; ++r)
    if (!sc.affected[r].empty()) aff_ranks.push_back(r);
  for (NodeId s = 0; s < n; ++s) {
    const std::size_t base = static_cast<std::size_t>(s) * n;
    for (NodeId t = 0; t < n; ++t) {
      Weight best = chg[base + t];
      if (layer.lists_materialized) {
        const std::uint16_t* row = layer.cand_row(s, t, n);
        for (std::size_t k = 0; k < nr; ++k) {
          const std::uint32_t r = row[k];
          if (!sc.rank_affects(r, s) && !sc.rank_affects(r, t)) {
            const Weight cand = layer.delta_pre(s, r, t);
            if (cand < best) best = cand;
            break;
          }
        }
      } else {
        for (std::uint32_t r = 0; r < nr; ++r) {
          if (sc.rank_affects(r, s) || sc.rank_affects(r, t)) continue;
          const Weight cand = layer.delta_pre(s, r, t);
          if (cand < best) best = cand;
        }
      }
      if (best < result[base + t]) result[base + t] = best;
    }
  }
}

std::vector<Weight> batch_delete_matrix(const DecrementalStructure& ds,
                                        const std::vector<NodeId>& deletions, Stats* stats) {
  const std::uint32_t n = ds.n_ids;
  const std::size_t pairs = static_cast<std::size_t>(n) * n;
  std::vector<std::uint8_t> dmask(n, 0);
  std::size_t d_count = 0;
  for (NodeId v : deletions) {
    if (v >= n || !ds.snapshot.alive(v))
      throw Error(Errc::DeletingUnknownNode, "batch_delete: id not in the structure");
    if (!dmask[v]) dmask[v] = 1, ++d_count;
  }
  if (d_count == 0) return ds.base_dist;

  std::vector<Weight> result(pairs, kInf);
  const double h = std::sqrt(static_cast<double>(ds.alive_n) / static_cast<double>(d_count));
  const std::uint32_t lo_levels = h >= 2.0 ? static_cast<std::uint32_t>(std::floor(std::log2(h))) : 0;
  for (const LayerStructure& L : ds.layers)
    if (L.level <= lo_levels) serve_level_accumulate(ds, L, dmask, result, stats);

  // Long paths: exact SSSP from/to the top-level centers in G minus D.
  const std::uint32_t top = h > 1.0 ? static_cast<std::uint32_t>(std::ceil(std::log2(h))) : 0;
  std::vector<NodeId> roots;
  const LayerStructure* top_layer = nullptr;
  for (const LayerStructure& L : ds.layers)
    if (L.level == top) top_layer = &L;
  if (top_layer != nullptr) {
    roots = top_layer->centers;
  } else {
    for (NodeId v = 0; v < n; ++v)  // |D| > n/4: fall back to every survivor
      if (ds.snapshot.alive(v)) roots.push_back(v);
  }
  for (NodeId v : roots) {
    if (dmask[v]) continue;
    HopTree to = dijkstra_sssp(ds.snapshot, v, Direction::ToRoot, dmask, stats);
    HopTree from = dijkstra_sssp(ds.snapshot, v, Direction::FromRoot, dmask, stats);
    for (NodeId s = 0; s < n; ++s) {
      const Weight dl = to.dist[s];
      if (dl >= kInf) continue;
      Weight* row = result.data() + static_cast<std::size_t>(s) * n;
      for (NodeId t = 0; t < n; ++t) {
        const Weight cand = sat_add(dl, from.dist[t]);
        if (cand < row[t]) row[t] = cand;
      }
    }
  }

  // Deleted ids answer nothing; survivors have distance 0 to themselves.
  for (NodeId v = 0; v < n; ++v) {
    if (ds.snapshot.alive(v) && !dmask[v]) {
      result[static_cast<std::size_t>(v) * n + v] = 0;
    } else {
      for (NodeId t = 0; t < n; ++t) {
        result[static_cast<std::size_t>(v) * n + t] = kInf;
        result[static_cast<std::size_t>(t) * n + v] = kInf;
      }
    }
  }
  return result;
}

namespace {

GraphSnapshot snapshot_minus(const GraphSnapshot& g, const std::vector<NodeId>& deletions) {
  GraphSnapshot out = g;
  std::vector<std::uint8_t> seen(g.capacity(), 0);
  for (NodeId v : deletions) {
    if (!seen[v]) out = out.apply(UpdateEvent::del(v));
    seen[v] = 1;
  }
  return out;
}

}  // namespace

DistanceView batch_delete(const DecrementalStructure& ds, const std::vector<NodeId>& deletions,
                          Stats* stats) {
  std::vector<Weight> m = batch_delete_matrix(ds, deletions, stats);
  return make_view(std::move(m), snapshot_minus(ds.snapshot, deletions));
}

// ---------------------------------------------------------------------------
// Deterministic variant

ShortRangeResult serve_short_range(const DecrementalStructure& ds,
                                   const std::vector<NodeId>& deletions, Stats* stats) {
  if (ds.layers.size() != 1)
    throw Error(Errc::InternalInconsistency, "serve_short_range: expects a single level");
  const LayerStructure& L = ds.layers[0];
  const std::uint32_t n = ds.n_ids;
  std::vector<std::uint8_t> dmask(n, 0);
  for (NodeId v : deletions) {
    if (v >= n || !ds.snapshot.alive(v))
      throw Error(Errc::DeletingUnknownNode, "batch_delete: id not in the structure");
    dmask[v] = 1;
  }

  ShortRangeResult out;
  out.n_ids = n;
  const std::size_t pairs = static_cast<std::size_t>(n) * n;
  out.dist.assign(pairs, kInf);
  out.hops.assign(pairs, -1);
  out.via_rank.assign(pairs, 0);
  out.via_repaired.assign(pairs, 0);
  out.scratch = serve_level_scratch(ds, L, dmask, &out.scr_to_trees, &out.scr_from_trees, stats);

  const std::size_t nr = L.visit_order.size();
  for (NodeId s = 0; s < n; ++s) {
    if (!ds.snapshot.alive(s) || dmask[s]) continue;
    for (NodeId t = 0; t < n; ++t) {
      if (!ds.snapshot.alive(t) || dmask[t]) continue;
      const std::size_t p = static_cast<std::size_t>(s) * n + t;
      Weight bw = kInf;
      std::int32_t bh = -1;
      std::uint32_t br = 0;
      std::uint8_t brep = 0;
      for (std::uint32_t r = 0; r < nr; ++r) {
        const bool as = out.scratch.rank_affects(r, s);
        const bool at = out.scratch.rank_affects(r, t);
        Weight dl, dr;
        std::int32_t hl, hr;
        std::uint8_t rep = 0;
        if (as || at) {
          dl = as ? out.scratch.scr_to[r][s] : L.to_trees[r].dist[s];
          dr = at ? out.scratch.scr_from[r][t] : L.from_trees[r].dist[t];
          if (dl >= kInf || dr >= kInf) continue;
          hl = as ? out.scr_to_trees[r].hops[s] : L.to_trees[r].hops[s];
          hr = at ? out.scr_from_trees[r].hops[t] : L.from_trees[r].hops[t];
          rep = 1;
        } else {
          dl = L.to_trees[r].dist[s];
          dr = L.from_trees[r].dist[t];
          if (dl >= kInf || dr >= kInf) continue;
          hl = L.to_trees[r].hops[s];
          hr = L.from_trees[r].hops[t];
        }
        const Weight w = sat_add(dl, dr);
        const std::int32_t hp = hl + hr;
        if (w < bw || (w == bw && hp < bh)) {
          bw = w;
          bh = hp;
          br = r + 1;
          brep = rep;
        }
      }
      if (s == t && (0 < bw || bw == kInf)) {
        bw = 0;
        bh = 0;
        br = 0;
        brep = 0;
      }
      out.dist[p] = bw;
      out.hops[p] = bw < kInf ? bh : -1;
      out.via_rank[p] = br;
      out.via_repaired[p] = brep;
    }
  }
  return out;
}

std::vector<NodeId> ShortRangeResult::path_nodes(const LayerStructure& layer, NodeId s,
                                                 NodeId t) const {
  const std::size_t p = static_cast<std::size_t>(s) * n_ids + t;
  if (dist[p] >= kInf) throw Error(Errc::Unreachable, "path_nodes: no recorded decomposition");
  if (via_rank[p] == 0) return {s};  // s == t
  const std::uint32_t r = via_rank[p] - 1;
  const HopTree& to = via_repaired[p] && scratch.rank_affects(r, s) ? scr_to_trees[r]
                                                                    : layer.to_trees[r];
  const HopTree& from = via_repaired[p] && scratch.rank_affects(r, t) ? scr_from_trees[r]
                                                                      : layer.from_trees[r];
  std::vector<NodeId> head = extract_path(to, s);    // s .. v
  std::vector<NodeId> tail = extract_path(from, t);  // v .. t
  head.insert(head.end(), tail.begin() + 1, tail.end());
  return head;
}

void long_range_complete(std::vector<Weight>& dist, std::uint32_t n_ids,
                         const std::vector<std::vector<NodeId>>& families, Stats* stats) {
  if (families.empty()) return;
  std::vector<NodeId> bridges = greedy_hitting_set(families);
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId b : bridges) {
      const Weight* brow = dist.data() + static_cast<std::size_t>(b) * n_ids;
      for (NodeId s = 0; s < n_ids; ++s) {
        const Weight dl = dist[static_cast<std::size_t>(s) * n_ids + b];
        if (dl >= kInf) continue;
        Weight* row = dist.data() + static_cast<std::size_t>(s) * n_ids;
        for (NodeId t = 0; t < n_ids; ++t) {
          const Weight cand = sat_add(dl, brow[t]);
          if (cand < row[t]) {
            row[t] = cand;
            changed = true;
          }
          if (stats) ++stats->relaxations;
        }
      }
    }
  }
}

std::vector<Weight> batch_delete_det_matrix(const DecrementalStructure& ds,
                                            const std::vector<NodeId>& deletions, Stats* stats) {
  const std::uint32_t n = ds.n_ids;
  ShortRangeResult sr = serve_short_range(ds, deletions, stats);
  const LayerStructure& L = ds.layers[0];
  const std::int32_t half = static_cast<std::int32_t>((L.hop_bound + 1) / 2);

  std::vector<std::vector<NodeId>> families;
  for (NodeId s = 0; s < n; ++s)
    for (NodeId t = 0; t < n; ++t) {
      const std::size_t p = static_cast<std::size_t>(s) * n + t;
      if (s != t && sr.dist[p] < kInf && sr.hops[p] >= half)
        families.push_back(sr.path_nodes(L, s, t));
    }

  std::vector<Weight> dist = std::move(sr.dist);
  long_range_complete(dist, n, families, stats);
  return dist;
}

DistanceView batch_delete_det(const DecrementalStructure& ds, const std::vector<NodeId>& deletions,
                              Stats* stats) {
  std::vector<Weight> m = batch_delete_det_matrix(ds, deletions, stats);
  return make_view(std::move(m), snapshot_minus(ds.snapshot, deletions));
}

}  // namespace dapsp
