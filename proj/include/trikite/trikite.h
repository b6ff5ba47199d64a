/*
 * trikite - triangle billiard complexity toolkit.
 *
 * C interface to the shared library: opaque handles, integer status codes,
 * caller-freed strings. Every function returns TK_OK on success; on failure
 * the return value names the error class and tk_last_error() carries a
 * human-readable message for the calling thread.
 */

#ifndef TRIKITE_H
#define TRIKITE_H

#include <stddef.h>
#include <stdint.h>

#ifndef TK_API
#if defined(_WIN32)
#define TK_API
#else
#define TK_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tk_status {
  TK_OK = 0,
  TK_ERR_INVALID_ARGUMENT = 1,
  TK_ERR_ADMISSIBILITY = 2,
  TK_ERR_BUDGET_EXCEEDED = 3,
  TK_ERR_INSUFFICIENT_DATA = 4,
  TK_ERR_DUPLICATE_ANGLE = 5,
  TK_ERR_HYPOTHESIS_NOT_MET = 6,
  TK_ERR_SEARCH_FAILED = 7,
  TK_ERR_ZERO_POLYNOMIAL = 8,
  TK_ERR_INFEASIBLE = 9,
  TK_ERR_DEGENERATE_RANGE = 10,
  TK_ERR_AMBIGUOUS_HIT = 11,
  TK_ERR_IO = 12,
  TK_ERR_INTERNAL = 13
} tk_status;

TK_API const char* tk_status_name(tk_status status);

/* Message for the most recent failure on this thread. */
TK_API const char* tk_last_error(void);

/* Frees any char* returned by this library. */
TK_API void tk_string_free(char* s);

TK_API const char* tk_version(void);

/* --- shapes ---------------------------------------------------------------- */

typedef struct tk_shape tk_shape;

/* Angles in radians; requires alpha > delta, beta > delta,
 * alpha + beta < pi - delta (all strict). */
TK_API tk_status tk_shape_create(double alpha, double beta, double delta, tk_shape** out);
TK_API void tk_shape_destroy(tk_shape* shape);
TK_API tk_status tk_shape_angles(const tk_shape* shape, double* alpha, double* beta,
                                 double* delta);

/* --- precision --------------------------------------------------------------- */

typedef struct tk_precision {
  double hit_tol;   /* vertex-hit tolerance, scaled by corridor depth */
  double safe_band; /* margins below this re-checked at extended precision */
  double exact_tol; /* extended-precision resolution floor, scaled by depth */
  int use_extended; /* nonzero: enable >= 100-bit re-checks */
} tk_precision;

TK_API void tk_precision_default(tk_precision* out);

/* --- diagonal enumeration ------------------------------------------------------ */

typedef struct tk_diagonal_set tk_diagonal_set;

typedef struct tk_diagonal {
  double direction;     /* local angle in the sector at start_vertex */
  double end_direction; /* local angle of the reversed traversal */
  double length;
  int reflections;
  int start_vertex;
  int end_vertex;
  int warning; /* vertex-hit decision stayed inside the tolerance band */
} tk_diagonal;

/* Corridor-pruned enumeration of all diagonals with <= n_max reflections. */
TK_API tk_status tk_enumerate(const tk_shape* shape, int start_vertex, int n_max,
                              const tk_precision* precision, tk_diagonal_set** out);

/* Unpruned oracle over all edge sequences; n_max is capped at 12. */
TK_API tk_status tk_enumerate_brute(const tk_shape* shape, int start_vertex, int n_max,
                                    const tk_precision* precision, tk_diagonal_set** out);

TK_API void tk_diagonal_set_destroy(tk_diagonal_set* set);
TK_API size_t tk_diagonal_set_size(const tk_diagonal_set* set);
TK_API tk_status tk_diagonal_set_get(const tk_diagonal_set* set, size_t index,
                                     tk_diagonal* out);
/* Edge-reflection sequence of one record (edges named by opposite vertex). */
TK_API tk_status tk_diagonal_set_edges(const tk_diagonal_set* set, size_t index, int* buf,
                                       size_t cap, size_t* out_len);
TK_API tk_status tk_diagonal_set_to_json(const tk_diagonal_set* set, char** out_json);
TK_API tk_status tk_diagonal_set_from_json(const char* json_text, tk_diagonal_set** out);

/* Record-for-record equality with a direction tolerance. */
TK_API tk_status tk_diagonal_sets_compare(const tk_diagonal_set* a, const tk_diagonal_set* b,
                                          double tol, int* out_equal, double* out_max_gap);

/* --- complexity tables ----------------------------------------------------------- */

typedef struct tk_table tk_table;

TK_API tk_status tk_table_per_vertex(const tk_diagonal_set* set, tk_table** out);
/* Undirected deduplicated count over diagonal sets of all three vertices. */
TK_API tk_status tk_table_global(const tk_diagonal_set* const* sets, size_t count, int n_max,
                                 tk_table** out);
TK_API tk_status tk_table_from_counts(const uint64_t* counts, size_t len, tk_table** out);
TK_API void tk_table_destroy(tk_table* table);
TK_API size_t tk_table_len(const tk_table* table);
TK_API uint64_t tk_table_count(const tk_table* table, size_t n);

/* --- physical ray tracing ---------------------------------------------------------- */

typedef enum tk_trace_status {
  TK_TRACE_HIT = 0,
  TK_TRACE_SURVIVED = 1,
  TK_TRACE_AMBIGUOUS = 2
} tk_trace_status;

TK_API tk_status tk_trace_ray(const tk_shape* shape, int start_vertex, double direction,
                              int max_reflections, const tk_precision* precision,
                              tk_trace_status* out_status, int* out_vertex,
                              int* out_reflections, double* out_length);

/* --- partitions --------------------------------------------------------------------- */

typedef struct tk_partition tk_partition;

TK_API tk_status tk_partition_build(const tk_diagonal_set* set, tk_partition** out);
TK_API void tk_partition_destroy(tk_partition* partition);
TK_API size_t tk_partition_size(const tk_partition* partition);
TK_API size_t tk_partition_count_up_to(const tk_partition* partition, int index);
TK_API tk_status tk_partition_csv(const tk_partition* partition, char** out_csv);

/* Good-position triples with indices in [lo, hi], as JSON. */
TK_API tk_status tk_good_triples_json(const tk_partition* partition, int lo, int hi,
                                      char** out_json);

/* Close-triple search (requires c >= 4, e^c < P_n, P_{n+c} >= (4+2c) P_n). */
TK_API tk_status tk_close_good_triple_json(const tk_partition* partition,
                                           const tk_table* per_vertex, int n, int c,
                                           char** out_json);

/* Smallest N = n + l*c with P_{N+c}/P_N >= 4+2c; found = 0 when absent. */
TK_API tk_status tk_ratio_jump(const tk_table* table, int n, int c, int k, double mu,
                               int* out_found, int* out_jump_n, double* out_ratio);

/* --- trigonometric polynomials -------------------------------------------------------- */

typedef struct tk_poly tk_poly;

/* JSON schema: [{"m": int, "l": int, "cos": "p/q", "sin": "p/q"}, ...]. */
TK_API tk_status tk_poly_from_json(const char* json_text, tk_poly** out);
TK_API tk_status tk_poly_to_json(const tk_poly* poly, char** out_json);
TK_API void tk_poly_destroy(tk_poly* poly);
TK_API int tk_poly_degree(const tk_poly* poly); /* -1 for the zero polynomial */
TK_API tk_status tk_poly_mul(const tk_poly* a, const tk_poly* b, tk_poly** out);
TK_API tk_status tk_poly_eval(const tk_poly* poly, double alpha, double beta, double* out);

/* Symbolic coordinates of the final kite of a move sequence ("A+", "A-",
 * "B+", "B-"), as JSON. */
TK_API tk_status tk_symbolic_kite_json(const char* const* moves, size_t n_moves,
                                       char** out_json);

/* Area polynomial of three picks (kite_index[i], choice[i]) along one
 * corridor; choices: 0 = alpha, 1 = beta, 2 = upper, 3 = lower. */
TK_API tk_status tk_area_poly_from_moves(const char* const* moves, size_t n_moves,
                                         const int* kite_index, const int* choices,
                                         tk_poly** out);

/* --- sublevel measure ------------------------------------------------------------------ */

TK_API tk_status tk_sublevel_fraction(const tk_poly* poly, double eps, uint64_t seed,
                                      uint64_t samples, int threads, double* out_fraction,
                                      double* out_standard_error);

/* --- constants and growth analysis ------------------------------------------------------- */

TK_API double tk_mu_star(void); /* sqrt(3) - 1 */
TK_API tk_status tk_feasibility(double mu, double epsilon, double gamma, int* out_feasible);
TK_API tk_status tk_growth_exponent(const tk_table* table, int n_lo, int n_hi,
                                    double* out_exponent, double* out_residual);

/* --- experiment runs --------------------------------------------------------------------- */
/* Each writes a JSON artifact body to *out_json (tk_string_free to release).
 * cache_dir may be NULL or empty to disable the enumeration cache. */

TK_API tk_status tk_run_enumerate(const tk_shape* shape, int n_max,
                                  const tk_precision* precision, int with_oracle,
                                  const char* cache_dir, int threads, char** out_json);

TK_API tk_status tk_run_partitions(const tk_shape* shape, int n_max, int vertex,
                                   const tk_precision* precision, const char* cache_dir,
                                   char** out_json);

TK_API tk_status tk_run_good_triples(const tk_shape* shape, int n_max, int vertex, int lo,
                                     int hi, const tk_precision* precision,
                                     const char* cache_dir, char** out_json);

TK_API tk_status tk_run_lemma22(const tk_shape* shape, int n_max, int vertex,
                                const int* fixture_cs, size_t n_fixtures, uint64_t seed,
                                const tk_precision* precision, const char* cache_dir,
                                char** out_json);

TK_API tk_status tk_run_symbolic_check(size_t count, int max_kites, int pairs, uint64_t seed,
                                       char** out_json);

TK_API tk_status tk_run_area_poly(const tk_shape* shape, int n_max, int vertex,
                                  size_t samples, int max_moves, int pairs, uint64_t seed,
                                  const tk_precision* precision, const char* cache_dir,
                                  char** out_json);

TK_API tk_status tk_run_measure_decay(const int* degrees, size_t n_degrees, double rate,
                                      double c_ref, size_t family_size, uint64_t samples,
                                      uint64_t seed, int threads, char** out_json);

TK_API tk_status tk_run_constants(char** out_json);

TK_API tk_status tk_run_report(const tk_shape* shape, int n_max, double mu, double epsilon,
                               int fit_lo, int fit_hi, const tk_precision* precision,
                               const char* cache_dir, int threads, char** out_json);

TK_API tk_status tk_run_verify_lemma21(int c, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* TRIKITE_H */
