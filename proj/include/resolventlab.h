/* resolventlab — C API for the monotone-operator / resolvent certification
 * library. Handles are opaque; every fallible call returns rl_status and
 * leaves a human-readable message in rl_last_error() on failure. Strings
 * returned through char** out-parameters are heap-allocated UTF-8 JSON (or
 * CSV where noted) and must be released with rl_string_free().
 */
#ifndef RESOLVENTLAB_H
#define RESOLVENTLAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rl_status {
  RL_OK = 0,
  RL_ERR_ARGUMENT = 1,  /* bad parameter / violated precondition */
  RL_ERR_PARSE = 2,     /* malformed JSON or spec string */
  RL_ERR_DIMENSION = 3, /* inconsistent dimensions */
  RL_ERR_SINGULAR = 4,  /* resolvent undefined: Id + A singular */
  RL_ERR_DOMAIN = 5,    /* evaluation outside a function's domain */
  RL_ERR_REGIME = 6,    /* parameter outside the supported regime (e.g. mu >= lambda) */
  RL_ERR_BRACKET = 7,   /* bracket search found no finite objective */
  RL_ERR_INTERNAL = 8
} rl_status;

const char* rl_version(void);

/* Thread-local message describing the most recent failure. */
const char* rl_last_error(void);

/* 1e-9, overridable through the RESOLVENT_LAB_TOL environment variable. */
double rl_default_tolerance(void);

void rl_string_free(char* s);

/* ---- operator graphs: {"dim": n, "pairs": [{"x": [..], "u": [..]}, ...]} */

typedef struct rl_graph rl_graph;

rl_status rl_graph_parse_json(const char* text, rl_graph** out);
void rl_graph_free(rl_graph* g);
int rl_graph_dim(const rl_graph* g);
long rl_graph_pairs(const rl_graph* g);
rl_status rl_graph_to_json(const rl_graph* g, char** json_out);

/* Certify a property over the graph sample. Properties:
 *   "rho-monotone", "rho-comonotone"           (operator graph),
 *   "conic", "nonexpansive", "averaged", "cocoercive", "lipschitz",
 *   "strongly-monotone"                        (graph read as map samples),
 *   "resolvent-single-valued"                  (param ignored).
 * passed_out receives 1/0; json_out the full report. */
rl_status rl_graph_certify(const rl_graph* g, const char* property, double param, double tol,
                           char** json_out, int* passed_out);

/* ---- dense matrices: {"n": k, "rows": [[..], ..]} */

typedef struct rl_matrix rl_matrix;

rl_status rl_matrix_parse_json(const char* text, rl_matrix** out);
void rl_matrix_free(rl_matrix* m);
int rl_matrix_dim(const rl_matrix* m);

/* {lambda_min_sym, rho_mono_opt, rho_comono_opt, alpha_conic, resolvent_defined} */
rl_status rl_matrix_classify(const rl_matrix* m, char** json_out);

/* Regime row for the optimal comonotonicity modulus plus numerically
 * certified row claims and the reflected-resolvent correspondence items.
 * all_ok_out receives 1 when every claim certifies and every applicable
 * correspondence agrees. */
rl_status rl_matrix_correspond(const rl_matrix* m, unsigned long long seed, double tol,
                               char** json_out, int* all_ok_out);

/* ---- proximal operators of hypoconvex scalar functions ----
 * function: "exp-hypoconvex" (alias "exp"), "indicator-quadratic",
 * "concave-quadratic", "quadratic-spline". spec: box ("R", "R+", "lo,hi")
 * for indicator-quadratic, pieces JSON for quadratic-spline, else NULL. */

rl_status rl_prox_eval(const char* function, double lambda, double mu, double x,
                       const char* spec, char** json_out);

/* x_{k+1} = Prox_{mu f}(x_k). csv_out (optional, may be NULL) receives the
 * trajectory CSV; json_out the summary {status, iterations, limit, ...}. */
rl_status rl_proximal_point(const char* function, double lambda, double mu, const char* spec,
                            double x0, long max_iter, double tol, char** csv_out,
                            char** json_out);

/* Krasnosel'skii-Mann iteration of the resolvent (Id + A)^{-1} of the given
 * matrix: x_{k+1} = (1-t) x_k + t J_A(x_k). */
rl_status rl_km_resolvent(const rl_matrix* m, const double* x0, int dim, double relaxation,
                          long max_iter, double tol, char** csv_out, char** json_out);

/* ---- constructive families ---- */

/* Matrix-file JSON of the rotation-family operator A_lambda (even dim). */
rl_status rl_family_rotation(double lambda, int dim, char** matrix_json_out);

/* {A, T, rho_mono, rho_comono, ...} for the same family. */
rl_status rl_family_rotation_info(double lambda, int dim, char** json_out);

/* Graph-file JSON of A_lambda sampled at `samples` seeded points. */
rl_status rl_family_rotation_graph(double lambda, int dim, int samples, unsigned long long seed,
                                   char** graph_json_out);

/* Projection family on span(e_1..e_k) in R^dim: T = (1-2a) Id + 2a P_U.
 * At alpha = 1/2 the operator is a normal cone; the report says so instead
 * of returning a matrix. */
rl_status rl_family_projection(double alpha, int dim, int subspace_dim, char** json_out);

/* Graph-file JSON of A = (-Id - r P_C)^{-1} over sampled points; C is the
 * interval [lo, hi], or the whole line when whole_line != 0. */
rl_status rl_family_counterexample_graph(double r, double lo, double hi, int whole_line,
                                         int samples, unsigned long long seed,
                                         char** graph_json_out);

#ifdef __cplusplus
}
#endif

#endif /* RESOLVENTLAB_H */
