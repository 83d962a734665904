#ifndef DAPSP_DECREMENTAL_HPP
#define DAPSP_DECREMENTAL_HPP

#include <memory>
#include <optional>
#include <vector>

#include "dapsp/graph.hpp"
#include "dapsp/hitting.hpp"
#include "dapsp/sssp.hpp"
#include "dapsp/types.hpp"
#include "dapsp/view.hpp"

namespace dapsp {

struct BuildConfig {
  double confidence = 3.0;
  std::uint64_t seed = 0;
  bool deterministic = false;  // visit every node, no sampling, single level
  bool unweighted = false;     // BFS kernels instead of Bellman-Ford
  // (level index, hop bound) per layer; empty = 2^i for i = 1..ceil(log2 n).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> levels;
  // Candidate lists are materialized for level indices <= this bound; only
  // levels <= floor(log2 sqrt(n)) can be consulted while serving deletions
  // (|D| >= 1 caps h at sqrt(n)), higher levels keep per-pair minima only.
  // 0 = derive from n.
  std::uint32_t list_max_level = 0;
};

// Per-level preprocessing output of one layer.
struct LayerStructure {
  std::uint32_t level = 0;
  std::uint32_t hop_bound = 0;
  std::vector<NodeId> centers;          // sorted ascending
  std::vector<std::uint8_t> is_center;  // indexed by node id
  std::vector<NodeId> visit_order;      // R_i; position = visit rank
  std::vector<std::uint32_t> rank_of;   // node id -> rank, or kNoRank
  std::vector<HopTree> to_trees;        // rank-indexed; dist(x, v) in G_i^v
  std::vector<HopTree> from_trees;      // rank-indexed; dist(v, x) in G_i^v
  std::vector<std::int64_t> congestion;
  bool lists_materialized = false;
  std::vector<std::uint16_t> cand;  // (s*n+t)*|R|+k -> rank, sorted by delta
  std::vector<Weight> level_min;    // per-pair min delta at build time

  static constexpr std::uint32_t kNoRank = 0xffffffffu;

  // delta_i(s, v, t) for v = visit_order[rank], as stored at build time.
  Weight delta_pre(NodeId s, std::uint32_t rank, NodeId t) const {
    return sat_add(to_trees[rank].dist[s], from_trees[rank].dist[t]);
  }
  const std::uint16_t* cand_row(NodeId s, NodeId t, std::uint32_t n_ids) const {
    return cand.data() +
           (static_cast<std::size_t>(s) * n_ids + t) * visit_order.size();
  }
};

// Read-only while serving deletions: batch_delete never mutates it.
struct DecrementalStructure {
  GraphSnapshot snapshot;  // non-negative weights (reweighted by the caller)
  std::vector<Weight> potentials;  // zero vector when input already non-negative
  BuildConfig cfg;
  std::uint32_t n_ids = 0;
  std::uint32_t alive_n = 0;
  std::vector<LayerStructure> layers;
  std::vector<Weight> base_dist;  // min over layers; the D = {} answer
};

// Incremental Algorithm-1 builder. Work is split into equal-grain units so
// the fully dynamic reduction can execute a 1/Delta fraction per update.
class Preprocessor {
 public:
  Preprocessor(GraphSnapshot g, BuildConfig cfg, Stats* stats = nullptr);

  std::size_t total_units() const { return total_units_; }
  const GraphSnapshot& snapshot() const { return out_.snapshot; }
  bool done() const;
  void step();
  void run_to_completion();
  DecrementalStructure take();

  // One out-of-schedule visit; test hook for the per-visit contract.
  void visit(std::uint32_t layer_index, NodeId v);

 private:
  struct LayerPlan {
    std::uint32_t planned_visits = 0;
    std::uint32_t visits_done = 0;
    std::uint32_t center_visits_left = 0;
    bool next_is_center = true;
    std::uint32_t list_chunks = 0;
    std::uint32_t chunks_done = 0;
    std::vector<std::uint8_t> visited;
  };

  void do_visit(std::uint32_t li, NodeId v);
  void do_list_chunk(std::uint32_t li);
  NodeId pick_next(std::uint32_t li) const;

  DecrementalStructure out_;
  Stats* stats_;
  std::vector<NodeId> alive_nodes_;
  std::vector<LayerPlan> plans_;
  std::uint32_t cur_layer_ = 0;
  std::size_t total_units_ = 0;
  std::size_t units_done_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t stamp_ctr_ = 0;
};

DecrementalStructure preprocess(const GraphSnapshot& g, const BuildConfig& cfg,
                                Stats* stats = nullptr);

// Deterministic single-level variant: every node is visited in
// max-congestion-first order.
DecrementalStructure preprocess_det(const GraphSnapshot& g, std::uint32_t h,
                                    Stats* stats = nullptr);

// Scratch state of one served level (exposed for differential tests).
struct LevelScratch {
  // Per visit rank: affected-node mask (empty vector = nothing affected).
  std::vector<std::vector<std::uint8_t>> affected;
  // Per affected rank: dist_H(x, v) and dist_H(v, x); empty when unaffected.
  std::vector<std::vector<Weight>> scr_to;
  std::vector<std::vector<Weight>> scr_from;

  bool rank_affects(std::uint32_t rank, NodeId x) const {
    return !affected[rank].empty() && affected[rank][x] != 0;
  }
};

// Builds the affected sets, sketch graphs and repaired distances of one level
// under deletion set D (given as a node mask). Trees of the sketch SSSPs are
// retained only when keep_trees is set.
LevelScratch serve_level_scratch(const DecrementalStructure& ds, const LayerStructure& layer,
                                 const std::vector<std::uint8_t>& dmask,
                                 std::vector<HopTree>* scr_to_trees = nullptr,
                                 std::vector<HopTree>* scr_from_trees = nullptr,
                                 Stats* stats = nullptr);

// min over changed triples for (s,t), combined with the first candidate-list
// entry whose delta is untouched.
Weight min_delta_query(const LayerStructure& layer, NodeId s, NodeId t,
                       const LevelScratch& scratch, std::uint32_t n_ids);

// All-pairs distances of snapshot minus D, in the snapshot's (reweighted)
// space. Row-major n_ids x n_ids; deleted and dead ids are kInf rows/columns.
std::vector<Weight> batch_delete_matrix(const DecrementalStructure& ds,
                                        const std::vector<NodeId>& deletions,
                                        Stats* stats = nullptr);

// Convenience wrapper returning a DistanceView against snapshot minus D.
DistanceView batch_delete(const DecrementalStructure& ds, const std::vector<NodeId>& deletions,
                          Stats* stats = nullptr);

// Best known (weight, hops) over stored plus repaired through-node
// decompositions of a single-level structure, with provenance for path
// extraction.
struct ShortRangeResult {
  std::uint32_t n_ids = 0;
  std::vector<Weight> dist;
  std::vector<std::int32_t> hops;
  std::vector<std::uint32_t> via_rank;     // rank + 1; 0 = none
  std::vector<std::uint8_t> via_repaired;  // decomposition came from a sketch
  LevelScratch scratch;
  std::vector<HopTree> scr_to_trees;
  std::vector<HopTree> scr_from_trees;

  // Node sequence of the recorded decomposition path for a finite pair.
  std::vector<NodeId> path_nodes(const LayerStructure& layer, NodeId s, NodeId t) const;
};

ShortRangeResult serve_short_range(const DecrementalStructure& ds,
                                   const std::vector<NodeId>& deletions,
                                   Stats* stats = nullptr);

// Completes a <=h-hop distance matrix to full distances: greedy hitting set
// over the recorded paths with at least ceil(h/2) hops, then repeated
// relaxation through the chosen bridge nodes until a fixpoint.
void long_range_complete(std::vector<Weight>& dist, std::uint32_t n_ids,
                         const std::vector<std::vector<NodeId>>& families, Stats* stats = nullptr);

// Deterministic batch deletion: sketch repair at the single level, then
// long-range completion. Exact, no probabilistic allowance.
std::vector<Weight> batch_delete_det_matrix(const DecrementalStructure& ds,
                                            const std::vector<NodeId>& deletions,
                                            Stats* stats = nullptr);
DistanceView batch_delete_det(const DecrementalStructure& ds,
                              const std::vector<NodeId>& deletions, Stats* stats = nullptr);

// Internal serving step shared by the variants: min-accumulates one level's
// repaired through-node minima into `result`.
void serve_level_accumulate(const DecrementalStructure& ds, const LayerStructure& layer,
                            const std::vector<std::uint8_t>& dmask, std::vector<Weight>& result,
                            Stats* stats = nullptr);

}  // namespace dapsp

#endif
