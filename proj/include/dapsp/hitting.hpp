#ifndef DAPSP_HITTING_HPP
#define DAPSP_HITTING_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "dapsp/types.hpp"

namespace dapsp {

// SplitMix64; one engine-wide seed, deterministic per-layer sub-streams.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Independent deterministic sub-stream.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0x2545f4914f6cdd1dULL * (index + 1)));
    mix.next();
    return mix;
  }
};

struct SamplerConfig {
  double confidence = 3.0;  // c >= 1
  std::uint64_t seed = 0;
  std::uint32_t n = 0;

  // x = 1 + 3(c+1) ln n
  double sampling_x() const {
    return n > 1 ? 1.0 + 3.0 * (confidence + 1.0) * std::log(static_cast<double>(n)) : 1.0;
  }
};

// Includes each node of the (ascending) universe independently with
// probability min(x/h, 1); draws are consumed in ascending node-id order and
// the comparison is done in 64-bit fixed point. stream_index selects the
// per-layer sub-stream.
std::vector<NodeId> sample_centers(const SamplerConfig& cfg, std::uint32_t h,
                                   const std::vector<NodeId>& universe,
                                   std::uint64_t stream_index = 0);

// Greedy cover: repeatedly pick the node in the most not-yet-hit families
// (ties to the smaller id) until every family is hit. Families must be
// non-empty; an empty sequence yields an empty set.
std::vector<NodeId> greedy_hitting_set(const std::vector<std::vector<NodeId>>& families);

}  // namespace dapsp

#endif
