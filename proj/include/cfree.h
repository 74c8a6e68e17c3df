/* cfree: forbidden-subgraph universality toolkit.
 *
 * C API over the C++ core: opaque handles, status codes, and strings
 * allocated by the library. Every function returns CF_OK on success; on any
 * other status, cf_last_error() describes what went wrong for the calling
 * thread. Strings handed out through char** are freed with cf_string_free;
 * handles with their matching *_free.
 */
#ifndef CFREE_H
#define CFREE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cf_status {
    CF_OK = 0,
    CF_ERR_INVALID_ARGUMENT = 1,
    CF_ERR_PARSE = 2,
    CF_ERR_PRECONDITION = 3,
    CF_ERR_LIMIT = 4, /* node budget, retry cap, or size/overflow guard */
    CF_ERR_INTERNAL = 5
} cf_status;

typedef struct cf_graph cf_graph;
typedef struct cf_hypergraph cf_hypergraph;
typedef struct cf_family cf_family;

const char* cf_last_error(void);
void cf_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

/* Text format: `# comment`, `n <vertex_count>`, `e <u> <v>` lines, and one
 * optional `p <basepoint>` line. out_basepoint (nullable) receives -1 when
 * no basepoint line is present. */
cf_status cf_graph_parse(const char* text, cf_graph** out, int* out_basepoint);
/* basepoint >= 0 adds a `p` line; pass -1 for a plain graph. */
cf_status cf_graph_serialize(const cf_graph* g, int basepoint, char** out_text);
void cf_graph_free(cf_graph* g);
int cf_graph_vertex_count(const cf_graph* g);
int cf_graph_edge_count(const cf_graph* g);

cf_status cf_graph_clique(int n, cf_graph** out);
cf_status cf_graph_cycle(int n, cf_graph** out);
cf_status cf_graph_delete_edge(const cf_graph* g, int u, int v, cf_graph** out);
cf_status cf_graph_attach_at(const cf_graph* g, int v, const cf_graph* part, int part_basepoint,
                             cf_graph** out);
cf_status cf_graph_disjoint_union(const cf_graph* const* gs, size_t count, cf_graph** out);

/* ---- embedding ------------------------------------------------------- */

/* anchors: anchor_pairs many (pattern, host) int pairs, flattened. out_map
 * must hold pattern vertex count ints; it is filled only when *out_found is
 * 1 and holds the lexicographically least embedding. node_budget 0 means
 * unlimited; exceeding a budget yields CF_ERR_LIMIT. */
cf_status cf_find_embedding(const cf_graph* pattern, const cf_graph* host, int induced,
                            const int* anchors, size_t anchor_pairs, uint64_t node_budget,
                            int* out_map, int* out_found);
cf_status cf_count_embeddings(const cf_graph* pattern, const cf_graph* host, int induced,
                              const int* anchors, size_t anchor_pairs, uint64_t node_budget,
                              uint64_t* out_count);
/* c must be connected and nonempty. */
cf_status cf_is_free(const cf_graph* host, const cf_graph* c, uint64_t node_budget, int* out_free);

/* ---- pruning --------------------------------------------------------- */

/* sigma: pointed graphs given as parallel arrays of graphs and basepoints. */
cf_status cf_prune(const cf_graph* c, const cf_graph* const* sigma, const int* sigma_basepoints,
                   size_t sigma_count, cf_graph** out);
cf_status cf_adjoin_copies(const cf_graph* g, const cf_graph* const* sigma,
                           const int* sigma_basepoints, size_t sigma_count, int copies,
                           cf_graph** out);
/* CF_ERR_PRECONDITION when g already contains the pruned constraint. */
cf_status cf_pruning_transfer_check(const cf_graph* c, const cf_graph* const* sigma,
                                    const int* sigma_basepoints, size_t sigma_count,
                                    const cf_graph* g, int copies, uint64_t node_budget,
                                    int* out_holds);

/* block_index is 1-based and must name a block with two cut vertices. */
cf_status cf_detachability_hypothesis(const cf_graph* c, int block_index, uint64_t node_budget,
                                      int* out_holds);
cf_status cf_detachability_stress(const cf_graph* c, int block_index, int trials, int max_vertices,
                                  uint64_t seed, uint64_t node_budget, char** out_report_json);

/* ---- high-girth hypergraphs ------------------------------------------ */

cf_status cf_hypergraph_build(int k, int girth, int edge_count, int adaptive, cf_hypergraph** out);
/* `N <n> k <k>` line, then one sorted line per hyperedge. */
cf_status cf_hypergraph_format(const cf_hypergraph* h, char** out_text);
/* -1 reports an acyclic hypergraph. */
cf_status cf_hypergraph_girth(const cf_hypergraph* h, int* out_girth);
void cf_hypergraph_free(cf_hypergraph* h);

/* ---- witness families ------------------------------------------------ */

cf_status cf_family_make(const cf_graph* c, int edge_count, int girth_margin, cf_family** out);
int cf_family_edge_count(const cf_family* f);
void cf_family_free(cf_family* f);
/* labeling: one 0/1 byte per hyperedge. */
cf_status cf_family_instantiate(const cf_family* f, const uint8_t* labeling, size_t labeling_len,
                                cf_graph** out);
cf_status cf_family_check_cfree(const cf_family* f, const uint8_t* labeling, size_t labeling_len,
                                uint64_t node_budget, int* out_cfree);
cf_status cf_family_check_distinguisher(const cf_family* f, const uint8_t* labeling,
                                        size_t labeling_len, int edge_index, uint64_t node_budget,
                                        int* out_created);
cf_status cf_family_check_rigidity(const cf_family* f, const uint8_t* labeling, size_t labeling_len,
                                   int trials, uint64_t seed, uint64_t node_budget,
                                   char** out_report_json);

/* ---- classification --------------------------------------------------- */

#define CF_OUTCOME_EXISTS 0
#define CF_OUTCOME_NOT_EXISTS 1
#define CF_OUTCOME_OPEN 2

cf_status cf_classify(const cf_graph* c, uint64_t node_budget, int* out_outcome,
                      char** out_trace_json);
cf_status cf_replay_trace(const char* trace_json, int* out_ok);
cf_status cf_reduction_demo(const cf_graph* c, int family_edges, int stress_trials, uint64_t seed,
                            uint64_t node_budget, char** out_report_json);

#ifdef __cplusplus
}
#endif

#endif /* CFREE_H */
