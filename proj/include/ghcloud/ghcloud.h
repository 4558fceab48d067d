/* ghcloud — exact Gromov–Hausdorff distances between finite metric spaces,
 * window scans for unbounded sequence spaces, and the exact number theory
 * of similarity coefficients for geometric sequence spaces.
 *
 * C API of the shared library. All functions return a ghc_status; on
 * failure, ghc_last_error() returns a thread-local JSON description
 * ({"kind", "message", "category", ...witness indices}). Output strings
 * are heap-allocated JSON (CSV where noted) owned by the caller and must
 * be released with ghc_string_free(). Exact rationals travel as
 * lowest-terms strings, "p" or "p/q", never floats.
 *
 * Spaces are opaque handles created from the JSON format
 *   {"n": <int>, "dist": [[<rational>, ...], ...]}
 * where <rational> is an integer or a "p/q" string.
 */

#ifndef GHCLOUD_H
#define GHCLOUD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(_WIN64)
#define GHC_API __declspec(dllexport)
#else
#define GHC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ghc_status {
  GHC_OK = 0,
  GHC_ERROR_USAGE = 1,  /* null argument or malformed call */
  GHC_ERROR_LIMIT = 2,  /* configured resource cap exceeded */
  GHC_ERROR_DOMAIN = 3  /* invalid input data */
} ghc_status;

typedef struct ghc_space ghc_space;

GHC_API const char* ghc_version(void);

/* Thread-local JSON for the most recent failure on this thread. The pointer
 * stays valid until the next failing call on the same thread. */
GHC_API const char* ghc_last_error(void);

GHC_API void ghc_string_free(char* s);

/* ---- metric spaces ---- */

GHC_API ghc_status ghc_space_parse(const char* json, ghc_space** out);
GHC_API void ghc_space_free(ghc_space* space);
GHC_API int ghc_space_size(const ghc_space* space);
GHC_API ghc_status ghc_space_to_json(const ghc_space* space, char** out);
GHC_API ghc_status ghc_space_diameter(const ghc_space* space, char** out);
GHC_API ghc_status ghc_space_scale(const ghc_space* space, const char* lambda,
                                   ghc_space** out);

/* Metric induced from a strictly increasing JSON array of rationals. */
GHC_API ghc_status ghc_space_from_points(const char* points_json,
                                         ghc_space** out);

/* Validation report for a candidate space: {"valid": true, "n": n} with
 * GHC_OK, or {"valid": false, "error": {...}} with GHC_ERROR_DOMAIN naming
 * the first violated axiom and its witness indices. */
GHC_API ghc_status ghc_validate(const char* json, char** report);

/* a_json / b_json: non-empty JSON arrays of point labels of the ambient. */
GHC_API ghc_status ghc_hausdorff(const ghc_space* ambient, const char* a_json,
                                 const char* b_json, char** out);

/* ---- Gromov-Hausdorff solver ---- */

/* {"value", "lower", "upper", "witness_pairs", "nodes_explored"}.
 * max_nodes == 0 selects the default node budget. */
GHC_API ghc_status ghc_gh_exact(const ghc_space* left, const ghc_space* right,
                                uint64_t max_nodes, char** result);

/* {"lower", "upper"} without running the exact search. */
GHC_API ghc_status ghc_gh_bounds(const ghc_space* left, const ghc_space* right,
                                 char** result);

/* ---- cloud analysis over sequence spaces ----
 *
 * Sequence specs use a mini-language: "geom:q=2,phi=square", "prime:3",
 * "list:1,2,5", "scale:2*geom:q=2". phi is "id", "square", or a
 * semicolon-separated integer list. */

/* json_out and csv_out may each be NULL; CSV columns are s,min_abs_delta.
 * base_x/base_y are 1-indexed base points (pass 1 for the default). */
GHC_API ghc_status ghc_cloud_delta(const char* seq_x, const char* seq_y,
                                   int window, int threads, int base_x,
                                   int base_y, char** json_out,
                                   char** csv_out);

GHC_API ghc_status ghc_cloud_drop(int64_t prime, int window, char** json_out);

GHC_API ghc_status ghc_cloud_represent(const char* lambda, const char* q,
                                       const char* phi, int window, int floor,
                                       char** json_out);

/* Float exploration mode (tolerance-based, for irrational parameters). */
GHC_API ghc_status ghc_cloud_represent_float(double lambda, double q,
                                             const char* phi, int window,
                                             int floor, double tol,
                                             char** json_out);

/* ---- similarity-coefficient number theory ---- */

GHC_API ghc_status ghc_stab_member(const char* lambda, int64_t q,
                                   char** json_out);
GHC_API ghc_status ghc_stab_form9(const char* lambda, int64_t q,
                                  uint64_t bound, char** json_out);
GHC_API ghc_status ghc_stab_eq3(int64_t q, uint64_t n, uint64_t m,
                                char** json_out);
GHC_API ghc_status ghc_stab_gcd(int64_t q, uint64_t n, uint64_t m,
                                char** json_out);

/* ---- chains of correspondences ---- */

/* chain_json: {"spaces": [...], "correspondences": [[[i,j],...], ...],
 * "budgets": [...]?}. depth <= 0 uses the whole chain; cap == 0 uses the
 * default thread cap. */
GHC_API ghc_status ghc_threads_build(const char* chain_json, int depth,
                                     uint64_t cap, char** json_out);

/* Seeded random walk sample of `count` threads; exploration aid for chains
 * too branchy to enumerate. */
GHC_API ghc_status ghc_threads_sample(const char* chain_json, int depth,
                                      uint64_t count, uint64_t seed,
                                      char** json_out);

/* ---- reproducibility suite ---- */

/* Runs every built-in end-to-end scenario; GHC_OK even when scenarios fail
 * (the report carries per-scenario pass flags). seed == 0 uses the default. */
GHC_API ghc_status ghc_repro_run(uint64_t seed, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* GHCLOUD_H */
