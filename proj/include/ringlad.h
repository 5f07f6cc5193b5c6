/*
 * ringlad - exact total embedding distributions of Ringel ladders.
 *
 * C interface over the computation core. Every call that produces data
 * returns RGL_OK and stores an opaque result handle in *out; the handle owns
 * all strings it hands back and stays valid until rgl_result_free. On any
 * other status *out is left untouched and rgl_last_error() describes the
 * problem for the calling thread.
 *
 * A result is a list of records plus a map of top-level info fields; both
 * store strings only (counts are decimal strings, since coefficients
 * overflow any fixed-width integer long before n = 60).
 *
 * Conventions:
 *   - rgl_dist family "O"/"L"/"P"/"R": n is the family subscript (the matrix
 *     dimension); family "total": n is the graph parameter, i.e. the ladder
 *     R_{n-1} with (n+1)x(n+1) overlap matrices.
 *   - methods: "recurrence", "closed", "bruteforce", "trace". Brute force
 *     and tracing are capped (2^32 assignments / 2^25 rotation systems) and
 *     report RGL_ERR_INFEASIBLE beyond the cap. "trace" applies to families
 *     P, R and "total" only.
 */

#ifndef RINGLAD_H
#define RINGLAD_H

#ifdef __cplusplus
extern "C" {
#endif

#define RGL_OK 0
#define RGL_ERR_USAGE 1       /* unknown family/method or argument out of range */
#define RGL_ERR_INFEASIBLE 2  /* n exceeds the method's feasibility cap */
#define RGL_ERR_INTERNAL 3    /* an internal invariant failed; a bug, not bad input */
#define RGL_ERR_NULL 4        /* a required pointer argument was NULL */

typedef struct rgl_result rgl_result;

/* Rank distribution or total embedding polynomial.
 * info: family, n, method, text (rendered polynomial), elapsed_ms.
 * records: {part: coeffs|genus|crosscap, exponent, count}, ascending. */
int rgl_dist(const char* family, long n, const char* method, int workers, rgl_result** out);

/* Cross-method invariant suite.
 * info: ok, checks, failures, first_failure, elapsed_ms.
 * records: {check, family, n, m, pass, expected, got}. */
int rgl_verify(long max_n_brute, long max_n_trace, long max_n_closed, int workers, rgl_result** out);

/* Recomputes the five published reference polynomials I(R_1)..I(R_5).
 * info: ok, elapsed_ms. records: {graph, n, expected, computed, pass}. */
int rgl_paper_check(rgl_result** out);

/* Published-vs-corrected formula report with searched witnesses.
 * info: entries. records: {id, kind, published, corrected, detail,
 * witness_searched, witness_found, witness, witness_n, witness_m,
 * published_value, corrected_value, search_limit}. */
int rgl_errata(long search_limit, rgl_result** out);

/* DOT rendering of a labeled ladder graph. kind: "ringel" (n >= 2, builds
 * R_{n-1}) or "closed-end" (n >= 1, builds L_n). info: dot, kind, n. */
int rgl_graph_dot(const char* kind, long n, rgl_result** out);

void rgl_result_free(rgl_result* result);

/* Top-level info field, or NULL when absent. Owned by the result. */
const char* rgl_result_info(const rgl_result* result, const char* key);

long rgl_result_count(const rgl_result* result);

/* Field of record `index`, or NULL when absent/out of range. */
const char* rgl_result_field(const rgl_result* result, long index, const char* key);

/* Message for the last failing call on this thread; empty if none. */
const char* rgl_last_error(void);

const char* rgl_version(void);

#ifdef __cplusplus
}
#endif

#endif /* RINGLAD_H */
