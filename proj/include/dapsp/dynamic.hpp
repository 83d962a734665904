#ifndef DAPSP_DYNAMIC_HPP
#define DAPSP_DYNAMIC_HPP

#include <memory>
#include <vector>

#include "dapsp/decremental.hpp"
#include "dapsp/graph.hpp"
#include "dapsp/types.hpp"
#include "dapsp/view.hpp"

namespace dapsp {

enum class Variant { RandWeighted, Deterministic, Unweighted };

struct EngineConfig {
  Variant variant = Variant::RandWeighted;
  double confidence = 3.0;  // c in the sampling rate
  std::uint64_t seed = 0;
  std::uint32_t delta_override = 0;  // 0 = size-derived rebuild interval
};

// Potentials p(v) = dist from a virtual source with 0-weight edges to every
// alive node; Bellman-Ford, throws NegativeCycle if it fails to settle.
std::vector<Weight> johnson_potentials(const GraphSnapshot& g);

struct InsertedNode {
  NodeId id;
  std::vector<Edge> in_edges;   // Edge::to = source
  std::vector<Edge> out_edges;  // Edge::to = target
};

// Incremental Floyd-Warshall overlay: folds the inserted nodes into a
// transitively-closed distance matrix, one node per pass (seed the new row
// and column from the declared edges, then relax every pair through the new
// node). Edges referencing ids with all-infinite rows are harmless. Throws
// NegativeCycleIntroduced if any diagonal entry drops below zero.
void fw_insert_overlay(std::vector<Weight>& dist, std::uint32_t n_ids,
                       const std::vector<InsertedNode>& inserted, Stats* stats = nullptr);

struct UpdateStats {
  std::uint64_t wall_ns = 0;  // timed by the caller
  std::uint64_t relaxations = 0;
  std::uint64_t sketch_edges = 0;
  std::uint64_t affected_nodes = 0;
  std::int64_t max_congestion = 0;
  std::uint64_t centers_total = 0;
  std::uint32_t swapped = 0;  // structures swapped in during this update
};

// Fully dynamic APSP over node insertions and deletions. Two-copy scheme:
// queries are answered from a finished structure while its replacement is
// built a fixed number of work units per update; copies swap every Delta
// updates so neither accumulates more than 2*Delta pending events.
class DynamicApsp {
 public:
  DynamicApsp(GraphSnapshot g0, EngineConfig cfg);
  DynamicApsp(const DynamicApsp&) = delete;
  DynamicApsp& operator=(const DynamicApsp&) = delete;

  // Strong guarantee: on error the engine state is unchanged.
  const UpdateStats& apply(const UpdateEvent& e);

  Weight query_dist(NodeId s, NodeId t) const;
  std::vector<NodeId> query_path(NodeId s, NodeId t) const;

  const GraphSnapshot& graph() const { return cur_; }
  const DistanceView& view() const { return view_; }
  const UpdateStats& last_stats() const { return stats_; }
  Variant variant() const { return cfg_.variant; }
  std::uint32_t delta() const { return delta_; }

  // Unweighted variant: per-layer hop bounds and rebuild intervals.
  std::size_t layer_count() const { return uw_layers_.size(); }
  std::uint32_t layer_hop_bound(std::size_t i) const { return uw_layers_[i].h; }
  std::uint32_t layer_delta(std::size_t i) const { return uw_layers_[i].delta; }
  // Indices of the layers swapped by the most recent update.
  const std::vector<std::size_t>& last_swapped_layers() const { return swapped_layers_; }

 private:
  struct CopyState {
    DecrementalStructure ds;
    std::vector<NodeId> deletions;
    std::vector<InsertedNode> overlay;
  };
  struct BuildState {
    std::unique_ptr<Preprocessor> pre;
    std::vector<Weight> potentials;
    std::vector<NodeId> deletions;
    std::vector<InsertedNode> overlay;
    std::size_t steps_per_update = 1;
  };
  struct UwLayer {
    std::uint32_t level = 0;
    std::uint32_t h = 0;
    std::uint32_t delta = 1;
    std::uint32_t counter = 0;
    CopyState active;
    BuildState build;
  };

  BuildState make_build(const GraphSnapshot& base, std::uint32_t delta,
                        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& levels);
  void swap_in(CopyState& slot, BuildState& b, const GraphSnapshot& rebuild_base,
               std::uint32_t delta,
               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& levels);
  void append_event(CopyState& c, BuildState& b, const UpdateEvent& e);
  void recompute_weighted();
  void recompute_unweighted();
  void fold_metadata(const DecrementalStructure& ds);

  EngineConfig cfg_;
  GraphSnapshot cur_;
  std::uint32_t delta_ = 1;       // weighted variants
  std::uint32_t det_h_ = 0;       // deterministic hop bound
  std::uint32_t since_swap_ = 0;  // weighted variants
  std::uint64_t rebuild_seq_ = 0;
  CopyState active_;              // weighted variants
  BuildState build_;              // weighted variants
  std::vector<UwLayer> uw_layers_;
  std::vector<InsertedNode> uw_inserted_;  // global overlay, insertion order
  std::vector<std::size_t> swapped_layers_;
  DistanceView view_;
  Stats step_stats_;
  UpdateStats stats_;
};

}  // namespace dapsp

#endif
