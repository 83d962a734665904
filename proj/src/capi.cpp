#include "dapsp.h"

#include <chrono>
#include <cstring>
#include <string>

#include "dapsp/dynamic.hpp"
#include "dapsp/graph.hpp"
#include "dapsp/oracle.hpp"
#include "dapsp/types.hpp"

using namespace dapsp;

struct dapsp_graph {
  GraphSnapshot g;
};

struct dapsp_engine {
  std::unique_ptr<DynamicApsp> e;
  dapsp_update_stats last{};
};

namespace {

thread_local std::string g_last_error;

int code_of(const Error& err) {
  switch (err.code()) {
    case Errc::MalformedInput:
      return DAPSP_ERR_MALFORMED_INPUT;
    case Errc::OverflowRisk:
      return DAPSP_ERR_OVERFLOW_RISK;
    case Errc::DeleteMissing:
    case Errc::DeletingUnknownNode:
      return DAPSP_ERR_DELETE_MISSING;
    case Errc::InsertDuplicate:
      return DAPSP_ERR_INSERT_DUPLICATE;
    case Errc::EdgeToDeadNode:
    case Errc::DanglingEndpoint:
      return DAPSP_ERR_EDGE_TO_DEAD_NODE;
    case Errc::NegativeCycle:
      return DAPSP_ERR_NEGATIVE_CYCLE;
    case Errc::NegativeCycleIntroduced:
      return DAPSP_ERR_NEGATIVE_CYCLE_INTRODUCED;
    case Errc::DeadEndpoint:
      return DAPSP_ERR_DEAD_ENDPOINT;
    case Errc::PathUnavailable:
      return DAPSP_ERR_PATH_UNAVAILABLE;
    case Errc::Unreachable:
      return DAPSP_ERR_UNREACHABLE;
    case Errc::WeightedInput:
      return DAPSP_ERR_WEIGHTED_INPUT;
    case Errc::SpecInvalid:
      return DAPSP_ERR_INVALID_ARGUMENT;
    default:
      return DAPSP_ERR_INTERNAL;
  }
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& err) {
    g_last_error = err.what();
    return code_of(err);
  } catch (const std::exception& ex) {
    g_last_error = ex.what();
    return DAPSP_ERR_INTERNAL;
  }
}

UpdateEvent make_insert(uint32_t v, const uint32_t* in_src, const int64_t* in_w, size_t n_in,
                        const uint32_t* out_dst, const int64_t* out_w, size_t n_out) {
  std::vector<Edge> ins, outs;
  ins.reserve(n_in);
  outs.reserve(n_out);
  for (size_t i = 0; i < n_in; ++i) ins.push_back({in_src[i], in_w[i]});
  for (size_t i = 0; i < n_out; ++i) outs.push_back({out_dst[i], out_w[i]});
  return UpdateEvent::insert(v, std::move(ins), std::move(outs));
}

int engine_update(dapsp_engine* e, const UpdateEvent& ev) {
  return guarded([&] {
    const auto t0 = std::chrono::steady_clock::now();
    const UpdateStats& st = e->e->apply(ev);
    const auto t1 = std::chrono::steady_clock::now();
    e->last.wall_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    e->last.relaxations = st.relaxations;
    e->last.sketch_edges = st.sketch_edges;
    e->last.affected_nodes = st.affected_nodes;
    e->last.max_congestion = st.max_congestion;
    e->last.centers_total = st.centers_total;
    e->last.swapped = st.swapped;
    return DAPSP_OK;
  });
}

}  // namespace

extern "C" {

int64_t dapsp_infinity(void) { return kInf; }

const char* dapsp_last_error(void) { return g_last_error.c_str(); }

int dapsp_graph_parse(const char* text, dapsp_graph** out) {
  if (!text || !out) return DAPSP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto* h = new dapsp_graph{load_graph(std::string(text))};
    *out = h;
    return DAPSP_OK;
  });
}

int dapsp_graph_create(uint32_t n, const uint32_t* from, const uint32_t* to, const int64_t* w,
                       size_t m, dapsp_graph** out) {
  if (!out || (m > 0 && (!from || !to || !w))) return DAPSP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<std::tuple<NodeId, NodeId, Weight>> edges;
    edges.reserve(m);
    for (size_t i = 0; i < m; ++i) edges.emplace_back(from[i], to[i], w[i]);
    *out = new dapsp_graph{GraphSnapshot::from_edges(n, edges)};
    return DAPSP_OK;
  });
}

void dapsp_graph_free(dapsp_graph* g) { delete g; }

uint32_t dapsp_graph_capacity(const dapsp_graph* g) { return g->g.capacity(); }
size_t dapsp_graph_alive_count(const dapsp_graph* g) { return g->g.alive_count(); }
size_t dapsp_graph_edge_count(const dapsp_graph* g) { return g->g.edge_count(); }
int dapsp_graph_node_alive(const dapsp_graph* g, uint32_t v) { return g->g.alive(v) ? 1 : 0; }

int dapsp_graph_delete_node(dapsp_graph* g, uint32_t v) {
  return guarded([&] {
    g->g = g->g.apply(UpdateEvent::del(v));
    return DAPSP_OK;
  });
}

int dapsp_graph_insert_node(dapsp_graph* g, uint32_t v, const uint32_t* in_src,
                            const int64_t* in_w, size_t n_in, const uint32_t* out_dst,
                            const int64_t* out_w, size_t n_out) {
  if ((n_in > 0 && (!in_src || !in_w)) || (n_out > 0 && (!out_dst || !out_w)))
    return DAPSP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    g->g = g->g.apply(make_insert(v, in_src, in_w, n_in, out_dst, out_w, n_out));
    return DAPSP_OK;
  });
}

int dapsp_graph_serialize(const dapsp_graph* g, char** out_text) {
  if (!out_text) return DAPSP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const std::string s = g->g.serialize();
    char* buf = new char[s.size() + 1];
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out_text = buf;
    return DAPSP_OK;
  });
}

void dapsp_string_free(char* s) { delete[] s; }

int dapsp_oracle_apsp(const dapsp_graph* g, int64_t* dist) {
  if (!dist) return DAPSP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    OracleResult r = apsp_oracle(g->g);
    std::memcpy(dist, r.dist.data(), r.dist.size() * sizeof(int64_t));
    return r.negative_cycle ? DAPSP_ERR_NEGATIVE_CYCLE : DAPSP_OK;
  });
}

int dapsp_engine_create(const dapsp_graph* g, const dapsp_engine_config* cfg, dapsp_engine** out) {
  if (!g || !out) return DAPSP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    EngineConfig ec;
    if (cfg) {
      switch (cfg->variant) {
        case DAPSP_VARIANT_RAND_WEIGHTED:
          ec.variant = Variant::RandWeighted;
          break;
        case DAPSP_VARIANT_DETERMINISTIC:
          ec.variant = Variant::Deterministic;
          break;
        case DAPSP_VARIANT_UNWEIGHTED:
          ec.variant = Variant::Unweighted;
          break;
        default:
          throw Error(Errc::SpecInvalid, "unknown variant");
      }
      if (cfg->confidence > 0) ec.confidence = cfg->confidence;
      ec.seed = cfg->seed;
      ec.delta_override = cfg->delta_override;
    }
    auto e = std::make_unique<DynamicApsp>(g->g, ec);
    *out = new dapsp_engine{std::move(e), {}};
    return DAPSP_OK;
  });
}

void dapsp_engine_free(dapsp_engine* e) { delete e; }

int dapsp_engine_delete_node(dapsp_engine* e, uint32_t v) {
  return engine_update(e, UpdateEvent::del(v));
}

int dapsp_engine_insert_node(dapsp_engine* e, uint32_t v, const uint32_t* in_src,
                             const int64_t* in_w, size_t n_in, const uint32_t* out_dst,
                             const int64_t* out_w, size_t n_out) {
  if ((n_in > 0 && (!in_src || !in_w)) || (n_out > 0 && (!out_dst || !out_w)))
    return DAPSP_ERR_INVALID_ARGUMENT;
  return engine_update(e, make_insert(v, in_src, in_w, n_in, out_dst, out_w, n_out));
}

uint32_t dapsp_engine_capacity(const dapsp_engine* e) { return e->e->graph().capacity(); }

int dapsp_engine_node_alive(const dapsp_engine* e, uint32_t v) {
  return e->e->graph().alive(v) ? 1 : 0;
}

int dapsp_engine_query_dist(const dapsp_engine* e, uint32_t s, uint32_t t, int64_t* out) {
  if (!out) return DAPSP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = e->e->query_dist(s, t);
    return DAPSP_OK;
  });
}

int dapsp_engine_query_path(const dapsp_engine* e, uint32_t s, uint32_t t, uint32_t* buf,
                            size_t buf_len, size_t* out_len) {
  if (!out_len) return DAPSP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<NodeId> path = e->e->query_path(s, t);
    *out_len = path.size();
    if (path.size() > buf_len) return DAPSP_ERR_BUFFER_TOO_SMALL;
    std::memcpy(buf, path.data(), path.size() * sizeof(uint32_t));
    return DAPSP_OK;
  });
}

int dapsp_engine_distances(const dapsp_engine* e, int64_t* dist) {
  if (!dist) return DAPSP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const DistanceView& v = e->e->view();
    std::memcpy(dist, v.dist.data(), v.dist.size() * sizeof(int64_t));
    return DAPSP_OK;
  });
}

int dapsp_engine_last_stats(const dapsp_engine* e, dapsp_update_stats* out) {
  if (!out) return DAPSP_ERR_INVALID_ARGUMENT;
  *out = e->last;
  return DAPSP_OK;
}

uint32_t dapsp_engine_delta(const dapsp_engine* e) { return e->e->delta(); }

}  // extern "C"
