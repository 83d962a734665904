/* C interface to the dynamic all-pairs shortest-paths engine.
 *
 * Every function returns a status code (DAPSP_OK on success); the most
 * recent failure message for the calling thread is available through
 * dapsp_last_error(). Handles are opaque and owned by the caller via the
 * matching _free function. Unreachable distances are dapsp_infinity().
 */
#ifndef DAPSP_H
#define DAPSP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dapsp_graph dapsp_graph;
typedef struct dapsp_engine dapsp_engine;

enum {
  DAPSP_OK = 0,
  DAPSP_ERR_MALFORMED_INPUT = 1,
  DAPSP_ERR_OVERFLOW_RISK = 2,
  DAPSP_ERR_DELETE_MISSING = 3,
  DAPSP_ERR_INSERT_DUPLICATE = 4,
  DAPSP_ERR_EDGE_TO_DEAD_NODE = 5,
  DAPSP_ERR_NEGATIVE_CYCLE = 6,
  DAPSP_ERR_NEGATIVE_CYCLE_INTRODUCED = 7,
  DAPSP_ERR_DEAD_ENDPOINT = 8,
  DAPSP_ERR_PATH_UNAVAILABLE = 9,
  DAPSP_ERR_UNREACHABLE = 10,
  DAPSP_ERR_WEIGHTED_INPUT = 11,
  DAPSP_ERR_INVALID_ARGUMENT = 12,
  DAPSP_ERR_BUFFER_TOO_SMALL = 13,
  DAPSP_ERR_INTERNAL = 14
};

enum {
  DAPSP_VARIANT_RAND_WEIGHTED = 0,
  DAPSP_VARIANT_DETERMINISTIC = 1,
  DAPSP_VARIANT_UNWEIGHTED = 2
};

int64_t dapsp_infinity(void);
const char* dapsp_last_error(void);

/* ---- graphs ---- */

/* Parses the text format: "n m" header, m lines "u v w", '#' comments. */
int dapsp_graph_parse(const char* text, dapsp_graph** out);
int dapsp_graph_create(uint32_t n, const uint32_t* from, const uint32_t* to, const int64_t* w,
                       size_t m, dapsp_graph** out);
void dapsp_graph_free(dapsp_graph* g);

uint32_t dapsp_graph_capacity(const dapsp_graph* g);  /* id space, tombstones included */
size_t dapsp_graph_alive_count(const dapsp_graph* g);
size_t dapsp_graph_edge_count(const dapsp_graph* g);
int dapsp_graph_node_alive(const dapsp_graph* g, uint32_t v);

int dapsp_graph_delete_node(dapsp_graph* g, uint32_t v);
/* in_src[i] -> v with weight in_w[i]; v -> out_dst[j] with weight out_w[j]. */
int dapsp_graph_insert_node(dapsp_graph* g, uint32_t v, const uint32_t* in_src,
                            const int64_t* in_w, size_t n_in, const uint32_t* out_dst,
                            const int64_t* out_w, size_t n_out);

/* Caller frees the returned text with dapsp_string_free. */
int dapsp_graph_serialize(const dapsp_graph* g, char** out_text);
void dapsp_string_free(char* s);

/* Reference Floyd-Warshall; dist must hold capacity^2 entries (row-major).
 * Returns DAPSP_ERR_NEGATIVE_CYCLE when one exists. */
int dapsp_oracle_apsp(const dapsp_graph* g, int64_t* dist);

/* ---- engine ---- */

typedef struct dapsp_engine_config {
  int variant;            /* DAPSP_VARIANT_* */
  double confidence;      /* sampling-rate parameter c; <= 0 means default 3 */
  uint64_t seed;
  uint32_t delta_override; /* 0 = size-derived rebuild interval */
} dapsp_engine_config;

typedef struct dapsp_update_stats {
  uint64_t wall_ns;
  uint64_t relaxations;
  uint64_t sketch_edges;
  uint64_t affected_nodes;
  int64_t max_congestion;
  uint64_t centers_total;
  uint32_t swapped;
} dapsp_update_stats;

int dapsp_engine_create(const dapsp_graph* g, const dapsp_engine_config* cfg, dapsp_engine** out);
void dapsp_engine_free(dapsp_engine* e);

/* Updates fail atomically: on error the engine still answers for the old
 * graph. wall_ns in the stats covers the whole update call. */
int dapsp_engine_delete_node(dapsp_engine* e, uint32_t v);
int dapsp_engine_insert_node(dapsp_engine* e, uint32_t v, const uint32_t* in_src,
                             const int64_t* in_w, size_t n_in, const uint32_t* out_dst,
                             const int64_t* out_w, size_t n_out);

uint32_t dapsp_engine_capacity(const dapsp_engine* e);
int dapsp_engine_node_alive(const dapsp_engine* e, uint32_t v);
int dapsp_engine_query_dist(const dapsp_engine* e, uint32_t s, uint32_t t, int64_t* out);
/* Node sequence s..t into buf; *out_len is set to the real length even when
 * the buffer is too small (capacity() entries always suffice). */
int dapsp_engine_query_path(const dapsp_engine* e, uint32_t s, uint32_t t, uint32_t* buf,
                            size_t buf_len, size_t* out_len);
/* Full matrix of the current view; dist must hold capacity^2 entries. */
int dapsp_engine_distances(const dapsp_engine* e, int64_t* dist);

int dapsp_engine_last_stats(const dapsp_engine* e, dapsp_update_stats* out);
uint32_t dapsp_engine_delta(const dapsp_engine* e);

#ifdef __cplusplus
}
#endif

#endif
