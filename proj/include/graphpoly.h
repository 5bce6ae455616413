#ifndef GRAPHPOLY_H
#define GRAPHPOLY_H

/* C interface to the graph-polynomial engine.
 *
 * Every function returns a gp_status.  Output strings are heap-allocated,
 * NUL-terminated UTF-8 (almost always a single JSON document) and must be
 * released with gp_free_string.  On error the output pointer is set to NULL
 * and gp_last_error() describes the problem for the calling thread.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gp_status {
  GP_OK = 0,                   /* success */
  GP_CHECK_FAILED = 1,         /* computation ran; a verified check failed */
  GP_INPUT_ERROR = 2,          /* unreadable/invalid input or options */
  GP_HYPOTHESIS_VIOLATION = 3  /* input outside a method's stated hypotheses */
} gp_status;

/* Opaque multigraph handle. */
typedef struct gp_graph gp_graph;

/* Most recent error message for this thread (empty string if none).  The
 * pointer stays valid until the next gp_* call on the same thread. */
const char* gp_last_error(void);

/* Library version string, e.g. "graphpoly 1.0.0". */
const char* gp_version(void);

void gp_free_string(char* s);

/* --- graphs ------------------------------------------------------------ */

/* Parse a graph from text.  format: "edgelist" or "graph6". */
gp_status gp_graph_parse(const char* text, const char* format, gp_graph** out);
void gp_graph_free(gp_graph* g);

/* Basic facts: vertices, edges, free circles, simple/cubic/connected/planar
 * flags, canonical code, edge list. */
gp_status gp_graph_info_json(const gp_graph* g, char** out_json);

/* --- polynomials -------------------------------------------------------- */

/* Coefficients of a polynomial.  what: "tutte", "chromatic" or "flow". */
gp_status gp_poly_json(const gp_graph* g, const char* what, char** out_json);

/* Exact evaluation of chromatic/flow (or tutte along y = x) at a point of
 * the golden field, written e.g. "phi", "phi+1", "phi^-2", "3-phi", "7/3".
 * For what = "tutte", `at` must be of the form "X,Y" with two such points. */
gp_status gp_eval_json(const gp_graph* g, const char* what, const char* at, char** out_json);

/* --- planarity ---------------------------------------------------------- */

/* method: "tutte" (linear-relation criterion; requires a simple 3-connected
 * cubic graph, otherwise GP_HYPOTHESIS_VIOLATION), "oracle" (combinatorial
 * embedding search), or "both".  verbose != 0 adds the per-edge defect
 * table.  With "both", a disagreement is reported in the JSON (field
 * "agree": false) together with a bug-report bundle; the status is still
 * GP_OK because the computation itself succeeded. */
gp_status gp_planarity_json(const gp_graph* g, const char* method, int verbose, char** out_json);

/* --- scans and verification --------------------------------------------- */

/* Called once per emitted report line (a one-line JSON document). */
typedef void (*gp_line_cb)(const char* line, void* user);

/* options_json: {"family":"cubic"|"k33plus2", "max_n":N, "check":
 * "conjecture"|"planarity-equiv"|"golden-chromatic", "jobs":J,
 * "resume":"path"}.  All fields optional.  Returns GP_CHECK_FAILED if the
 * scan found violations/disagreements (summary JSON still produced). */
gp_status gp_scan(const char* options_json, gp_line_cb cb, void* user, char** out_summary_json);

/* options_json: {"identity": "golden-chromatic"|"golden-flow"|"duality"|
 * "upper-bound"|"lower-bound"|"commuting-square", "family":
 * "apollonian"|"named", "v":V, "count":C, "seed":S}.  Emits one line per
 * check; returns GP_CHECK_FAILED if any check failed or was undecided. */
gp_status gp_verify(const char* options_json, gp_line_cb cb, void* user,
                    char** out_summary_json);

/* Diagram-algebra self-test.  degree: strand count (>= 1); at: "phi",
 * "neginvphi" or "generic".  Returns GP_CHECK_FAILED if any suite fails. */
gp_status gp_tl_selftest(int degree, const char* at, char** out_report_json);

#ifdef __cplusplus
}
#endif

#endif /* GRAPHPOLY_H */
