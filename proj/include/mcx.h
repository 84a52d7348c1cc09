/* mcx — matching complexes of polygonal line tilings.
 *
 * C interface to the shared library: opaque handles, integer status codes,
 * JSON strings for structured data. Every char* returned by an mcx_*
 * function is owned by the caller and must be released with
 * mcx_string_free(); every handle has a matching *_free(). On any failure
 * the function returns a nonzero status and mcx_last_error() describes it
 * (thread-local).
 */
#ifndef MCX_H
#define MCX_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcx_status {
    MCX_OK = 0,
    MCX_ERROR_INVALID_ARGUMENT = 1,
    MCX_ERROR_PARSE = 2,
    MCX_ERROR_UNKNOWN_ID = 3,
    MCX_ERROR_DUPLICATE_ID = 4,
    MCX_ERROR_SELF_LOOP = 5,
    MCX_ERROR_DANGLING_ENDPOINT = 6,
    MCX_ERROR_PRECONDITION = 7,
    MCX_ERROR_BUDGET = 8,
    MCX_ERROR_NOT_SIMPLE = 9,
    MCX_ERROR_MALFORMED = 10,
    MCX_ERROR_INTERNAL = 99
} mcx_status;

typedef struct mcx_graph mcx_graph;
typedef struct mcx_complex mcx_complex;
typedef struct mcx_homotopy mcx_homotopy;
typedef struct mcx_certificate mcx_certificate;
typedef struct mcx_reduce_result mcx_reduce_result;

const char* mcx_last_error(void);
const char* mcx_status_name(mcx_status status);
void mcx_string_free(char* s);

/* ---- graphs ------------------------------------------------------- */

/* {"vertices":[...],"edges":[{"id":...,"u":...,"v":...},...]} */
mcx_status mcx_graph_from_json(const char* json_text, mcx_graph** out);

/* Tiling spec, e.g. {"family":"triangular","t":4} or
 * {"family":"extended","s":[4,6],"k":2,"l":1,"offsets":[2]}. */
mcx_status mcx_graph_generate(const char* spec_json, mcx_graph** out);

char* mcx_graph_to_json(const mcx_graph* g);
char* mcx_graph_canonical_key(const mcx_graph* g);
size_t mcx_graph_vertex_count(const mcx_graph* g);
size_t mcx_graph_edge_count(const mcx_graph* g);
void mcx_graph_free(mcx_graph* g);

/* ---- complexes and homology --------------------------------------- */

/* size_cap < 0 means no cap (edge count limited by the enumeration budget). */
mcx_status mcx_matching_complex(const mcx_graph* g, int size_cap, mcx_complex** out);
char* mcx_complex_to_json(const mcx_complex* k); /* ground + facets */
int mcx_complex_dim(const mcx_complex* k);
void mcx_complex_free(mcx_complex* k);

/* {"betti":{"1":5},"torsion":{},"euler":-5} */
mcx_status mcx_complex_homology_json(const mcx_complex* k, char** out);
mcx_status mcx_graph_homology_json(const mcx_graph* g, char** out);

/* ---- reduction engine ---------------------------------------------- */

/* strategy: "auto", "scripted_triangle", "scripted_pentagon",
 * "scripted_extended"; budget 0 means the default. */
mcx_status mcx_reduce(const mcx_graph* g, const char* strategy,
                      size_t budget, mcx_reduce_result** out);
mcx_status mcx_reduce_spec(const char* spec_json, const char* strategy,
                           size_t budget, mcx_reduce_result** out);

int mcx_reduce_result_is_partial(const mcx_reduce_result* r);
int mcx_reduce_result_budget_exhausted(const mcx_reduce_result* r);
size_t mcx_reduce_result_nodes(const mcx_reduce_result* r);
/* NULL when partial. */
mcx_homotopy* mcx_reduce_result_class(const mcx_reduce_result* r);
mcx_certificate* mcx_reduce_result_certificate(const mcx_reduce_result* r);
/* Stuck graph JSON when partial, else NULL. */
char* mcx_reduce_result_stuck_graph_json(const mcx_reduce_result* r);
void mcx_reduce_result_free(mcx_reduce_result* r);

char* mcx_homotopy_to_text(const mcx_homotopy* c);
char* mcx_homotopy_to_json(const mcx_homotopy* c);
int mcx_homotopy_equals(const mcx_homotopy* a, const mcx_homotopy* b);
void mcx_homotopy_free(mcx_homotopy* c);

char* mcx_certificate_to_json(const mcx_certificate* c);
mcx_status mcx_certificate_from_json(const char* json_text, mcx_certificate** out);
/* *ok = 1 iff the trace replays to its recorded class with all witnesses valid. */
mcx_status mcx_certificate_verify(const mcx_certificate* c, int* ok);
void mcx_certificate_free(mcx_certificate* c);

/* ---- closed forms --------------------------------------------------- */

/* Decimal string (arbitrary precision); n >= 1. */
mcx_status mcx_fibonacci(long long n, char** out);
mcx_status mcx_triangle_homotopy(int t, mcx_homotopy** out);
mcx_status mcx_pentagon_homotopy(int t, mcx_homotopy** out);
mcx_status mcx_pendant_pentagon_homotopy(int t, mcx_homotopy** out);
mcx_status mcx_dim_interval(int t, int* lo, int* hi);
mcx_status mcx_f_of_t(int t, int* out);

/* source: "gf" or "recursion"; rows [{"t":8,"spheres":{"2":8,"3":1}},...]. */
mcx_status mcx_sphere_table_json(int t_max, const char* source, char** out);

/* Reference-table comparison rows with per-row golden-mismatch flags. */
mcx_status mcx_triangle_table_json(int t_max, char** out);

/* ---- cross-checked verification ------------------------------------- */

/* channels: comma-separated subset of "homology,engine,formula".
 * *all_agree = 1 iff every pair of producing channels agrees. */
mcx_status mcx_verify_run_json(const char* spec_json, const char* channels,
                               size_t budget, long long seed, int has_seed,
                               char** report_json, int* all_agree);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MCX_H */
