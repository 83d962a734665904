#ifndef DAPSP_TYPES_HPP
#define DAPSP_TYPES_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dapsp {

using NodeId = std::uint32_t;
using Weight = std::int64_t;

// Sentinel for "no node" (e.g. missing tree link / first edge).
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// "No path" sentinel. Arithmetic saturates at kInf.
inline constexpr Weight kInf = std::numeric_limits<Weight>::max();

// Saturating addition: kInf absorbs, finite sums clamp instead of wrapping.
inline Weight sat_add(Weight a, Weight b) {
  if (a == kInf || b == kInf) return kInf;
  if (b > 0 && a > kInf - b) return kInf;
  if (b < 0 && a < std::numeric_limits<Weight>::min() - b) return -kInf;
  return a + b;
}

enum class Errc {
  MalformedInput,
  OverflowRisk,
  DanglingEndpoint,
  DeleteMissing,
  InsertDuplicate,
  EdgeToDeadNode,
  RootExcluded,
  RootDead,
  NegativeEdge,
  WeightedInput,
  Unreachable,
  EmptyFamily,
  NegativeWeight,
  AlreadyVisited,
  DeletingUnknownNode,
  InternalInconsistency,
  NegativeCycle,
  NegativeCycleIntroduced,
  DeadEndpoint,
  PathUnavailable,
  SpecInvalid,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Exact operation counters, accumulated by kernels and the engine.
struct Stats {
  std::uint64_t relaxations = 0;
  std::uint64_t sketch_edges = 0;
  std::uint64_t affected_nodes = 0;

  void reset() { *this = Stats{}; }
};

}  // namespace dapsp

#endif
