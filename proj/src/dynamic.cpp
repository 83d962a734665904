#include "dapsp/dynamic.hpp"

#include <algorithm>
#include <cmath>

#include "dapsp/hitting.hpp"
#include "dapsp/sssp.hpp"

namespace dapsp {

namespace {

double log2_floor1(std::size_t n) {
  return std::max(1.0, std::log2(static_cast<double>(std::max<std::size_t>(n, 2))));
}

void erase_inserted(std::vector<InsertedNode>& list, NodeId v) {
  list.erase(std::remove_if(list.begin(), list.end(),
                            [v](const InsertedNode& x) { return x.id == v; }),
             list.end());
}

}  // namespace

std::vector<Weight> johnson_potentials(const GraphSnapshot& g) {
  const NodeId n = g.capacity();
  // Virtual source with a 0-edge to every alive node; in-place Bellman-Ford
  // settles within alive_count passes unless a negative cycle exists.
  std::vector<Weight> p(n, 0);
  const std::size_t max_rounds = g.alive_count();
  bool changed = true;
  for (std::size_t r = 0; r <= max_rounds && changed; ++r) {
    changed = false;
    for (NodeId u = 0; u < n; ++u) {
      if (!g.alive(u) || p[u] >= kInf) continue;
      for (const Edge& e : g.out(u)) {
        const Weight cand = p[u] + e.w;
        if (cand < p[e.to]) {
          p[e.to] = cand;
          changed = true;
        }
      }
    }
    if (changed && r == max_rounds)
      throw Error(Errc::NegativeCycle, "graph contains a negative cycle");
  }
  return p;
}

void fw_insert_overlay(std::vector<Weight>& dist, std::uint32_t n_ids,
                       const std::vector<InsertedNode>& inserted, Stats* stats) {
  for (const InsertedNode& node : inserted) {
    const NodeId v = node.id;
    const std::size_t vrow = static_cast<std::size_t>(v) * n_ids;
    // New row first, then the new column; the column pass with x = v then
    // sees the fresh row, which is what closes cycles through v.
    for (const Edge& e : node.out_edges) {
      const NodeId u = e.to;
      for (NodeId y = 0; y < n_ids; ++y) {
        const Weight cand = sat_add(e.w, dist[static_cast<std::size_t>(u) * n_ids + y]);
        if (cand < dist[vrow + y]) dist[vrow + y] = cand;
        if (stats) ++stats->relaxations;
      }
    }
    for (const Edge& e : node.in_edges) {
      const NodeId u = e.to;
      for (NodeId x = 0; x < n_ids; ++x) {
        const Weight cand = sat_add(dist[static_cast<std::size_t>(x) * n_ids + u], e.w);
        Weight& cell = dist[static_cast<std::size_t>(x) * n_ids + v];
        if (cand < cell) cell = cand;
        if (stats) ++stats->relaxations;
      }
    }
    Weight& dvv = dist[vrow + v];
    if (dvv > 0) dvv = 0;
    for (NodeId s = 0; s < n_ids; ++s) {
      const Weight dl = dist[static_cast<std::size_t>(s) * n_ids + v];
      if (dl >= kInf) continue;
      Weight* row = dist.data() + static_cast<std::size_t>(s) * n_ids;
      for (NodeId t = 0; t < n_ids; ++t) {
        const Weight cand = sat_add(dl, dist[vrow + t]);
        if (cand < row[t]) row[t] = cand;
        if (stats) ++stats->relaxations;
      }
    }
  }
  for (NodeId v = 0; v < n_ids; ++v)
    if (dist[static_cast<std::size_t>(v) * n_ids + v] < 0)
      throw Error(Errc::NegativeCycleIntroduced, "insertion closed a negative cycle");
}

// ---------------------------------------------------------------------------

DynamicApsp::DynamicApsp(GraphSnapshot g0, EngineConfig cfg)
    : cfg_(cfg), cur_(std::move(g0)) {
  const std::size_t n0 = std::max<std::size_t>(cur_.alive_count(), 1);
  const double l2 = log2_floor1(n0);

  auto with_override = [&](double d) {
    if (cfg_.delta_override > 0) return cfg_.delta_override;
    return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::ceil(d)));
  };

  switch (cfg_.variant) {
    case Variant::RandWeighted: {
      delta_ = with_override(std::cbrt(static_cast<double>(n0)) * std::pow(l2, 2.0 / 3.0));
      build_ = make_build(cur_, delta_, {});
      swap_in(active_, build_, cur_, delta_, {});
      recompute_weighted();
      break;
    }
    case Variant::Deterministic: {
      det_h_ = std::max<std::uint32_t>(
          1, static_cast<std::uint32_t>(
                 std::ceil(std::pow(static_cast<double>(n0), 0.25) / std::pow(l2, 0.25))));
      delta_ = with_override(std::sqrt(static_cast<double>(n0) / l2));
      const std::vector<std::pair<std::uint32_t, std::uint32_t>> lv = {{1u, det_h_}};
      build_ = make_build(cur_, delta_, lv);
      swap_in(active_, build_, cur_, delta_, lv);
      recompute_weighted();
      break;
    }
    case Variant::Unweighted: {
      if (cur_.has_negative_weight())
        throw Error(Errc::WeightedInput, "unweighted variant requires unit weights");
      for (NodeId u = 0; u < cur_.capacity(); ++u)
        for (const Edge& e : cur_.out(u))
          if (e.w != 1) throw Error(Errc::WeightedInput, "unweighted variant requires unit weights");
      const double sq = std::sqrt(static_cast<double>(n0));
      const std::uint32_t hroot = static_cast<std::uint32_t>(std::ceil(sq));
      std::uint32_t top = 1;
      while ((1u << top) < hroot) ++top;
      uw_layers_.resize(top);
      for (std::uint32_t i = 1; i <= top; ++i) {
        UwLayer& L = uw_layers_[i - 1];
        L.level = i;
        L.h = 1u << i;
        const double td = std::ceil(2.0 * sq / (static_cast<double>(L.h) * std::sqrt(l2)));
        L.delta = cfg_.delta_override > 0
                      ? cfg_.delta_override
                      : std::max<std::uint32_t>(1, static_cast<std::uint32_t>(td) / 2);
        const std::vector<std::pair<std::uint32_t, std::uint32_t>> lv = {{i, L.h}};
        L.build = make_build(cur_, L.delta, lv);
        swap_in(L.active, L.build, cur_, L.delta, lv);
      }
      recompute_unweighted();
      break;
    }
  }
  stats_ = UpdateStats{};
  swapped_layers_.clear();
}

DynamicApsp::BuildState DynamicApsp::make_build(
    const GraphSnapshot& base, std::uint32_t delta,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& levels) {
  BuildState b;
  b.potentials = johnson_potentials(base);
  BuildConfig bc;
  bc.confidence = cfg_.confidence;
  bc.seed = SplitMix64::stream(cfg_.seed, ++rebuild_seq_).next();
  bc.deterministic = cfg_.variant == Variant::Deterministic;
  bc.unweighted = cfg_.variant == Variant::Unweighted;
  bc.levels = levels;
  b.pre = std::make_unique<Preprocessor>(base.reweighted(b.potentials), bc, &step_stats_);
  const std::size_t total = std::max<std::size_t>(b.pre->total_units(), 1);
  b.steps_per_update = (total + delta - 1) / delta;
  return b;
}

void DynamicApsp::swap_in(CopyState& slot, BuildState& b, const GraphSnapshot& rebuild_base,
                          std::uint32_t delta,
                          const std::vector<std::pair<std::uint32_t, std::uint32_t>>& levels) {
  b.pre->run_to_completion();
  CopyState next;
  next.ds = b.pre->take();
  next.ds.potentials = std::move(b.potentials);
  next.deletions = std::move(b.deletions);
  next.overlay = std::move(b.overlay);
  slot = std::move(next);
  b = make_build(rebuild_base, delta, levels);
  ++stats_.swapped;
}

void DynamicApsp::append_event(CopyState& c, BuildState& b, const UpdateEvent& e) {
  if (e.kind == UpdateEvent::Kind::DeleteNode) {
    if (c.ds.snapshot.alive(e.node))
      c.deletions.push_back(e.node);
    else
      erase_inserted(c.overlay, e.node);
    if (b.pre->snapshot().alive(e.node))
      b.deletions.push_back(e.node);
    else
      erase_inserted(b.overlay, e.node);
  } else {
    InsertedNode node{e.node, e.in_edges, e.out_edges};
    c.overlay.push_back(node);
    b.overlay.push_back(std::move(node));
  }
}

const UpdateStats& DynamicApsp::apply(const UpdateEvent& e) {
  GraphSnapshot next = cur_.apply(e);  // validates ids and endpoints
  if (e.kind == UpdateEvent::Kind::InsertNode) {
    if (cfg_.variant == Variant::Unweighted) {
      for (const Edge& x : e.in_edges)
        if (x.w != 1) throw Error(Errc::WeightedInput, "unweighted variant requires unit weights");
      for (const Edge& x : e.out_edges)
        if (x.w != 1) throw Error(Errc::WeightedInput, "unweighted variant requires unit weights");
    } else if (next.has_negative_weight()) {
      try {
        johnson_potentials(next);
      } catch (const Error&) {
        throw Error(Errc::NegativeCycleIntroduced, "insertion would close a negative cycle");
      }
    }
  }

  step_stats_.reset();
  stats_ = UpdateStats{};
  swapped_layers_.clear();

  if (cfg_.variant == Variant::Unweighted) {
    for (std::size_t i = 0; i < uw_layers_.size(); ++i) {
      UwLayer& L = uw_layers_[i];
      if (L.counter >= L.delta) {
        swap_in(L.active, L.build, cur_, L.delta, {{L.level, L.h}});
        L.counter = 0;
        swapped_layers_.push_back(i);
      }
    }
    cur_ = std::move(next);
    for (UwLayer& L : uw_layers_) {
      if (e.kind == UpdateEvent::Kind::DeleteNode) {
        if (L.active.ds.snapshot.alive(e.node)) L.active.deletions.push_back(e.node);
        if (L.build.pre->snapshot().alive(e.node)) L.build.deletions.push_back(e.node);
      }
      ++L.counter;
      for (std::size_t k = 0; k < L.build.steps_per_update && !L.build.pre->done(); ++k)
        L.build.pre->step();
      if (L.active.deletions.size() > 2ull * L.delta)
        throw Error(Errc::InternalInconsistency, "deletion window overflow");
    }
    if (e.kind == UpdateEvent::Kind::DeleteNode) {
      erase_inserted(uw_inserted_, e.node);
    } else {
      uw_inserted_.push_back(InsertedNode{e.node, e.in_edges, e.out_edges});
    }
    // Drop overlay nodes already covered by every layer snapshot.
    uw_inserted_.erase(std::remove_if(uw_inserted_.begin(), uw_inserted_.end(),
                                      [&](const InsertedNode& x) {
                                        for (const UwLayer& L : uw_layers_)
                                          if (!L.active.ds.snapshot.alive(x.id)) return false;
                                        return true;
                                      }),
                       uw_inserted_.end());
    recompute_unweighted();
  } else {
    if (since_swap_ >= delta_) {
      const std::vector<std::pair<std::uint32_t, std::uint32_t>> lv =
          cfg_.variant == Variant::Deterministic
              ? std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1u, det_h_}}
              : std::vector<std::pair<std::uint32_t, std::uint32_t>>{};
      swap_in(active_, build_, cur_, delta_, lv);
      since_swap_ = 0;
    }
    cur_ = std::move(next);
    append_event(active_, build_, e);
    ++since_swap_;
    for (std::size_t k = 0; k < build_.steps_per_update && !build_.pre->done(); ++k)
      build_.pre->step();
    if (active_.deletions.size() > 2ull * delta_ || active_.overlay.size() > 2ull * delta_)
      throw Error(Errc::InternalInconsistency, "pending-event window overflow");
    recompute_weighted();
  }

  stats_.relaxations = step_stats_.relaxations;
  stats_.sketch_edges = step_stats_.sketch_edges;
  stats_.affected_nodes = step_stats_.affected_nodes;
  return stats_;
}

void DynamicApsp::fold_metadata(const DecrementalStructure& ds) {
  for (const LayerStructure& L : ds.layers) {
    stats_.centers_total += L.centers.size();
    for (std::int64_t c : L.congestion) stats_.max_congestion = std::max(stats_.max_congestion, c);
  }
}

void DynamicApsp::recompute_weighted() {
  const DecrementalStructure& ds = active_.ds;
  std::vector<Weight> mr = cfg_.variant == Variant::Deterministic
                               ? batch_delete_det_matrix(ds, active_.deletions, &step_stats_)
                               : batch_delete_matrix(ds, active_.deletions, &step_stats_);
  const std::uint32_t na = ds.n_ids;
  const std::uint32_t n = cur_.capacity();
  std::vector<Weight> m(static_cast<std::size_t>(n) * n, kInf);
  const std::vector<Weight>& p = ds.potentials;
  for (NodeId s = 0; s < na; ++s) {
    const Weight* src = mr.data() + static_cast<std::size_t>(s) * na;
    Weight* dst = m.data() + static_cast<std::size_t>(s) * n;
    for (NodeId t = 0; t < na; ++t)
      if (src[t] < kInf) dst[t] = src[t] - p[s] + p[t];
  }
  fw_insert_overlay(m, n, active_.overlay, &step_stats_);
  view_ = make_view(std::move(m), cur_);
  fold_metadata(ds);
}

void DynamicApsp::recompute_unweighted() {
  const std::uint32_t n = cur_.capacity();
  std::vector<Weight> m(static_cast<std::size_t>(n) * n, kInf);
  for (const UwLayer& L : uw_layers_) {
    const DecrementalStructure& ds = L.active.ds;
    const std::uint32_t nl = ds.n_ids;
    std::vector<std::uint8_t> dmask(nl, 0);
    for (NodeId v : L.active.deletions) dmask[v] = 1;
    std::vector<Weight> temp(static_cast<std::size_t>(nl) * nl, kInf);
    serve_level_accumulate(ds, ds.layers[0], dmask, temp, &step_stats_);
    for (NodeId s = 0; s < nl; ++s) {
      if (!cur_.alive(s)) continue;
      const Weight* src = temp.data() + static_cast<std::size_t>(s) * nl;
      Weight* dst = m.data() + static_cast<std::size_t>(s) * n;
      for (NodeId t = 0; t < nl; ++t)
        if (src[t] < dst[t] && cur_.alive(t)) dst[t] = src[t];
    }
    fold_metadata(ds);
  }
  // Paths longer than every layer's reach: exact search from the top-level
  // centers in the newest snapshot minus its pending deletions.
  {
    const UwLayer& T = uw_layers_.back();
    const DecrementalStructure& ds = T.active.ds;
    const std::uint32_t nl = ds.n_ids;
    std::vector<std::uint8_t> dmask(nl, 0);
    for (NodeId v : T.active.deletions) dmask[v] = 1;
    for (NodeId v : ds.layers[0].centers) {
      if (dmask[v] || !ds.snapshot.alive(v)) continue;
      HopTree to = dijkstra_sssp(ds.snapshot, v, Direction::ToRoot, dmask, &step_stats_);
      HopTree from = dijkstra_sssp(ds.snapshot, v, Direction::FromRoot, dmask, &step_stats_);
      for (NodeId s = 0; s < nl; ++s) {
        if (to.dist[s] >= kInf || !cur_.alive(s)) continue;
        Weight* dst = m.data() + static_cast<std::size_t>(s) * n;
        for (NodeId t = 0; t < nl; ++t) {
          if (!cur_.alive(t)) continue;
          const Weight cand = sat_add(to.dist[s], from.dist[t]);
          if (cand < dst[t]) dst[t] = cand;
        }
      }
    }
  }
  for (NodeId v = 0; v < n; ++v)
    if (cur_.alive(v)) m[static_cast<std::size_t>(v) * n + v] = 0;

  std::vector<InsertedNode> overlay;
  for (const InsertedNode& x : uw_inserted_) {
    bool everywhere = true;
    for (const UwLayer& L : uw_layers_)
      if (!L.active.ds.snapshot.alive(x.id)) everywhere = false;
    if (!everywhere && cur_.alive(x.id)) overlay.push_back(x);
  }
  fw_insert_overlay(m, n, overlay, &step_stats_);
  view_ = make_view(std::move(m), cur_);
}

Weight DynamicApsp::query_dist(NodeId s, NodeId t) const {
  if (!cur_.alive(s) || !cur_.alive(t))
    throw Error(Errc::DeadEndpoint, "query endpoint is not alive");
  return view_.at(s, t);
}

std::vector<NodeId> DynamicApsp::query_path(NodeId s, NodeId t) const {
  if (!cur_.alive(s) || !cur_.alive(t))
    throw Error(Errc::DeadEndpoint, "query endpoint is not alive");
  return walk_path(view_, s, t);
}

}  // namespace dapsp
