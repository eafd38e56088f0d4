/* C interface to the subdp library: writing capacity of directed
 * state-transition graphs via subgraph domatic partition.
 *
 * All objects are opaque handles created and destroyed here. Functions
 * return subdp_status; on any failure subdp_last_error() describes the
 * problem for the calling thread. Array results use a fill pattern: pass a
 * buffer and its capacity, the required length is always written to *len,
 * and the data is copied only when it fits (call once with cap 0 to size).
 */
#ifndef SUBDP_H
#define SUBDP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum subdp_status {
    SUBDP_OK = 0,
    SUBDP_ERR_INPUT = 1,    /* malformed input or argument */
    SUBDP_ERR_REFUSED = 2,  /* declined by a size guard */
    SUBDP_ERR_FAILED = 3,   /* randomized search exhausted its rounds */
    SUBDP_ERR_INTERNAL = 4
} subdp_status;

typedef struct subdp_graph subdp_graph;
typedef struct subdp_peel subdp_peel;
typedef struct subdp_report subdp_report;
typedef struct subdp_coloring subdp_coloring;
typedef struct subdp_codec subdp_codec;

const char* subdp_version(void);
/* Message for the most recent failing call on this thread. */
const char* subdp_last_error(void);
void subdp_string_free(char* s);

/* ---- graphs ------------------------------------------------------- */

/* arcs holds arc_count (u,v) pairs flattened to 2*arc_count ints. */
subdp_status subdp_graph_build(int32_t n, const int32_t* arcs, size_t arc_count,
                               subdp_graph** out);
subdp_status subdp_graph_parse(const char* text, subdp_graph** out);
subdp_status subdp_graph_serialize(const subdp_graph* g, char** out_text);
subdp_status subdp_graph_gen_dense(int32_t n, double alpha, uint64_t seed, subdp_graph** out);
subdp_status subdp_graph_gen_near_complete(int32_t n, int32_t removed_edges, uint64_t seed,
                                           subdp_graph** out);
void subdp_graph_free(subdp_graph* g);

int32_t subdp_graph_n(const subdp_graph* g);
int64_t subdp_graph_arc_count(const subdp_graph* g);
int subdp_graph_is_bidirectional(const subdp_graph* g);
/* stats = {min_out, max_out, min_in, max_in} */
subdp_status subdp_graph_degree_stats(const subdp_graph* g, int32_t stats[4]);
/* Exact |arcs|/n as a reduced fraction. */
subdp_status subdp_graph_avg_out_degree(const subdp_graph* g, int64_t* num, int64_t* den);

/* ---- subgraph selection ------------------------------------------- */

subdp_status subdp_peel_run(const subdp_graph* g, subdp_peel** out);
void subdp_peel_free(subdp_peel* p);
size_t subdp_peel_step_count(const subdp_peel* p);
subdp_status subdp_peel_step(const subdp_peel* p, size_t i, int32_t* node, int32_t* out_degree,
                             int64_t* eps_num, int64_t* eps_den);
int subdp_peel_degenerate(const subdp_peel* p);
subdp_status subdp_peel_terminal(const subdp_peel* p, int32_t* nodes, size_t cap, size_t* len);

subdp_status subdp_max_core(const subdp_graph* g, int32_t* k, int32_t* nodes, size_t cap,
                            size_t* len);

/* ---- bounds -------------------------------------------------------- */

typedef enum subdp_lower_witness {
    SUBDP_LOWER_TRIVIAL = 0,
    SUBDP_LOWER_LLL = 1,
    SUBDP_LOWER_TURAN = 2
} subdp_lower_witness;

typedef enum subdp_upper_witness {
    SUBDP_UPPER_DEGREE = 0,
    SUBDP_UPPER_KCORE = 1
} subdp_upper_witness;

typedef struct subdp_bracket {
    int32_t lower;
    int32_t upper;
    int32_t lower_witness; /* subdp_lower_witness */
    int32_t upper_witness; /* subdp_upper_witness */
} subdp_bracket;

subdp_status subdp_degree_upper_bound(const subdp_graph* g, int32_t* out);
subdp_status subdp_kcore_upper_bound(const subdp_graph* g, int32_t* out);
/* Bidirectional graphs only. */
subdp_status subdp_turan_lower_bound(const subdp_graph* g, int32_t* out);
/* subset may be NULL with subset_len 0 for the full graph. */
subdp_status subdp_lll_lower_bound(const subdp_graph* g, const int32_t* subset,
                                   size_t subset_len, int32_t* out);
subdp_status subdp_capacity_bracket(const subdp_graph* g, subdp_bracket* out);

/* ---- capacity ------------------------------------------------------ */

/* node_limit <= 0 selects the default guard (16). */
subdp_status subdp_exact_capacity(const subdp_graph* g, int32_t node_limit, subdp_report** out);
subdp_status subdp_approx_capacity(const subdp_graph* g, uint64_t seed, subdp_report** out);
void subdp_report_free(subdp_report* r);

int32_t subdp_report_value(const subdp_report* r);
int subdp_report_is_exact(const subdp_report* r);
subdp_status subdp_report_bracket(const subdp_report* r, subdp_bracket* out);
int32_t subdp_report_target_ell(const subdp_report* r);
int subdp_report_target_degraded(const subdp_report* r);
size_t subdp_report_witness_size(const subdp_report* r);
/* nodes and colors are parallel arrays of witness_size entries. */
subdp_status subdp_report_witness(const subdp_report* r, int32_t* nodes, int32_t* colors,
                                  size_t cap, size_t* len);

/* ---- colorings ----------------------------------------------------- */

typedef struct subdp_mt_log {
    int64_t rounds;
    int succeeded;
} subdp_mt_log;

subdp_status subdp_random_coloring(const subdp_graph* g, const int32_t* subset,
                                   size_t subset_len, int32_t ell, uint64_t seed,
                                   subdp_coloring** out);
/* max_rounds <= 0 selects the default 10*n*ell. Returns SUBDP_ERR_FAILED
 * (with *out NULL) when the round budget runs out; log is filled either way. */
subdp_status subdp_moser_tardos(const subdp_graph* g, const int32_t* subset, size_t subset_len,
                                int32_t ell, uint64_t seed, int64_t max_rounds,
                                subdp_coloring** out, subdp_mt_log* log);
subdp_status subdp_coloring_build(const subdp_graph* g, const int32_t* nodes,
                                  const int32_t* colors, size_t len, int32_t ell,
                                  subdp_coloring** out);
subdp_status subdp_coloring_parse(const subdp_graph* g, const char* text, subdp_coloring** out);
subdp_status subdp_coloring_serialize(const subdp_coloring* c, char** out_text);
void subdp_coloring_free(subdp_coloring* c);

size_t subdp_coloring_size(const subdp_coloring* c);
int32_t subdp_coloring_ell(const subdp_coloring* c);
subdp_status subdp_coloring_entries(const subdp_coloring* c, int32_t* nodes, int32_t* colors,
                                    size_t cap, size_t* len);
/* The coloring's domain names the induced subgraph it is checked on. */
subdp_status subdp_validate_coloring(const subdp_graph* g, const subdp_coloring* c, int* valid);
subdp_status subdp_find_violations(const subdp_graph* g, const subdp_coloring* c, int32_t* nodes,
                                   size_t cap, size_t* len);

/* ---- codecs -------------------------------------------------------- */

subdp_status subdp_codec_build(const subdp_graph* g, const subdp_coloring* c, subdp_codec** out);
subdp_status subdp_codec_parse(const char* text, subdp_codec** out);
subdp_status subdp_codec_serialize(const subdp_codec* c, char** out_text);
void subdp_codec_free(subdp_codec* c);

int32_t subdp_codec_alphabet(const subdp_codec* c);
size_t subdp_codec_state_count(const subdp_codec* c);
subdp_status subdp_codec_states(const subdp_codec* c, int32_t* states, size_t cap, size_t* len);
subdp_status subdp_codec_encode(const subdp_codec* c, int32_t state, int32_t message,
                                int32_t* next);
subdp_status subdp_codec_decode(const subdp_codec* c, int32_t state, int32_t* message);
/* states_out, if non-NULL, receives the state after each of the `count`
 * writes. Fails (SUBDP_ERR_INTERNAL) if any step breaks a codec invariant. */
subdp_status subdp_codec_simulate(const subdp_codec* c, int32_t start, const int32_t* messages,
                                  size_t count, int32_t* states_out);

/* ---- benchmarks ----------------------------------------------------- */

typedef struct subdp_bench_row {
    int32_t n;
    double mean_ell;
    double mean_lower;
    double stat;
} subdp_bench_row;

/* mode: 0 dense ensembles (alpha used), 1 near-complete (alpha ignored).
 * rows must hold n_count entries. */
subdp_status subdp_bench(int mode, const int32_t* ns, size_t n_count, double alpha,
                         int32_t seeds, uint64_t base_seed, subdp_bench_row* rows);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SUBDP_H */
