#include "dapsp/hitting.hpp"

#include <algorithm>
#include <unordered_map>

namespace dapsp {

std::vector<NodeId> sample_centers(const SamplerConfig& cfg, std::uint32_t h,
                                   const std::vector<NodeId>& universe,
                                   std::uint64_t stream_index) {
  if (h < 1) throw Error(Errc::SpecInvalid, "hop bound must be >= 1");
  double p = cfg.sampling_x() / static_cast<double>(h);
  std::vector<NodeId> centers;
  if (p >= 1.0) {
    centers = universe;
    return centers;
  }
  // 63-bit fixed-point threshold; draws masked to the same width.
  const std::uint64_t scale = 1ULL << 63;
  auto threshold = static_cast<std::uint64_t>(p * static_cast<double>(scale));
  SplitMix64 rng = SplitMix64::stream(cfg.seed, stream_index);
  for (NodeId v : universe) {
    std::uint64_t draw = rng.next() >> 1;
    if (draw < threshold) centers.push_back(v);
  }
  return centers;
}

std::vector<NodeId> greedy_hitting_set(const std::vector<std::vector<NodeId>>& families) {
  for (const auto& f : families)
    if (f.empty()) throw Error(Errc::EmptyFamily, "empty family");
  std::vector<std::uint8_t> hit(families.size(), 0);
  std::size_t remaining = families.size();
  std::vector<NodeId> cover;
  while (remaining > 0) {
    std::unordered_map<NodeId, std::size_t> count;
    for (std::size_t i = 0; i < families.size(); ++i) {
      if (hit[i]) continue;
      for (NodeId v : families[i]) ++count[v];
    }
    NodeId best = kNoNode;
    std::size_t best_count = 0;
    for (const auto& [v, c] : count)
      if (c > best_count || (c == best_count && v < best)) {
        best = v;
        best_count = c;
      }
    cover.push_back(best);
    for (std::size_t i = 0; i < families.size(); ++i) {
      if (hit[i]) continue;
      if (std::find(families[i].begin(), families[i].end(), best) != families[i].end()) {
        hit[i] = 1;
        --remaining;
      }
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

}  // namespace dapsp
