#ifndef PERMUTORIA_H
#define PERMUTORIA_H

#include <stdint.h>

#if defined(_WIN32)
#define PM_API __declspec(dllexport)
#else
#define PM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every call returns one of these; PM_OK is zero. */
enum {
  PM_OK = 0,
  PM_INVALID_ARGUMENT,
  PM_PARSE_ERROR,
  PM_LIMIT_EXCEEDED,
  PM_ZERO_OBJECT,
  PM_OVERFLOW,
  PM_NON_UNIT_DIVISOR,
  PM_INVALID_WALK,
  PM_NOT_INNER_CORNER,
  PM_NOT_A_TABLEAU,
  PM_NOT_DOMINANT,
  PM_NOT_PARTITION_SHAPED,
  PM_SHAPE_MISMATCH,
  PM_NOT_LR,
  PM_CANONICAL_ASSERT_FAILED,
  PM_NOT_IN_DOMAIN,
  PM_NOT_AVOIDER,
  PM_NOT_ALTERNATING,
  PM_TOO_MANY_COLUMNS,
  PM_NOT_YAMANOUCHI,
  PM_NO_PLACEMENT,
  PM_INTERNAL = 99
};

typedef struct pm_context pm_context;

PM_API pm_context* pm_context_new(void);
PM_API void pm_context_free(pm_context* ctx);

/* Message of the last failed call on ctx; "" after a success. */
PM_API const char* pm_last_error(const pm_context* ctx);
PM_API const char* pm_status_name(int status);
PM_API const char* pm_version(void);

/*
 * String results are owned by ctx and stay valid until the next call on the
 * same context. Pattern sets are comma separated ("213,4123"); parent rules
 * are "standard", "ext" or "ext-alt"; orders are "x,y,z" or a single x order.
 */

/* Effective size caps as JSON. */
PM_API int pm_limits(pm_context* ctx, const char** out_json);

/* |S_n(patterns)|, or |DA_n(patterns)| when da is nonzero. */
PM_API int pm_count(pm_context* ctx, const char* patterns, int n, int da, int workers, int64_t* out);
PM_API int pm_count_extended(pm_context* ctx, const char* patterns, int d, int c, int r, int64_t* out);

/* Series dumps: one "i<TAB>j<TAB>k<TAB>value" line per cell with i+j+k <= max_total. */
PM_API int pm_series_brute(pm_context* ctx, const char* patterns, const char* rule, const char* orders, int max_total,
                           const char** out);
PM_API int pm_series_formula(pm_context* ctx, const char* formula, const char* orders, int max_total, const char** out);
PM_API int pm_series_graph(pm_context* ctx, const char* patterns, const char* rule, int depth_n, int depth_t,
                           const char* orders, int max_total, const char** out);

/* Generating graph as "dot" or "json". */
PM_API int pm_discover(pm_context* ctx, const char* patterns, const char* rule, int depth_n, int depth_t,
                       const char* format, const char** out);
PM_API int pm_graph_equivalent(pm_context* ctx, const char* a, const char* b, int depth_n, int depth_t, int* out);

/*
 * Bijections: "phi", "phi-inv", "theta", "theta-inv", "psi", "psi-inv",
 * "colpair", "colpair-inv", "rsk", "rsk-inv". tau is used by psi only
 * (e.g. "34"); NULL selects 34.
 * pm_biject maps one input and writes "input<TAB>image".
 * pm_biject_table maps the whole domain of size n, one TSV line per element.
 */
PM_API int pm_biject(pm_context* ctx, const char* map, const char* input, const char* tau, const char** out);
PM_API int pm_biject_table(pm_context* ctx, const char* map, int n, const char* tau, const char** out);

/*
 * Tableau operations. The tableau is either row text (".,1,2/1,3", '.' for
 * inner cells) or the JSON form produced by this call. options_json may be
 * NULL or hold any of:
 *   "letters": int, "box": [rows, cols], "orientation": "lr" | "anti-lr",
 *   "other": tableau (second argument of switch / rsk-inv), "i": int (bk).
 * ops: show, jdt, rsk, rsk-inv, rec, tau, rotate, bk, xi, evacuation, chi,
 * rho, rho-dual, omega, omega-bk, switch, is-lr, verify-diagram.
 */
PM_API int pm_tableau(pm_context* ctx, const char* op, const char* tableau, const char* options_json,
                      const char** out_json);
PM_API int pm_lr_coefficient(pm_context* ctx, const char* lambda, const char* mu, const char* nu, int64_t* out);

/*
 * Verification suites. options_json may be NULL or hold "box": [r, c],
 * "letters", "n", "seed". format is "json" or "text". *hard_failure is set
 * when the suite failed and is not a conjecture report.
 */
PM_API int pm_suites(pm_context* ctx, const char** out_json);
PM_API int pm_verify(pm_context* ctx, const char* suite, const char* options_json, const char* format,
                     const char** out, int* hard_failure);

#ifdef __cplusplus
}
#endif

#endif
