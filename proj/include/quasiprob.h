/* C surface of the quasiprob library. All functions return qp_status; details
 * of the last failure are available via qp_last_error(). Strings returned
 * through char** are heap-allocated and must be released with qp_free(). */
#ifndef QUASIPROB_H
#define QUASIPROB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  QP_OK = 0,
  QP_ERR_INVALID = 1, /* bad argument / malformed input */
  QP_ERR_DOMAIN = 2,  /* valid input outside the supported domain */
  QP_ERR_INTERNAL = 3
} qp_status;

const char* qp_last_error(void);
void qp_free(void* p);

/* Opaque handle to a sampled density on a uniform symmetric grid. */
typedef struct qp_grid qp_grid;

qp_status qp_grid_from_samples(const double* x, const double* v, int n, qp_grid** out);
/* Catalog families: normal, laplace, cauchy, quartic, normal_mix. */
qp_status qp_grid_family(const char* name, double extent, int points, qp_grid** out);
/* Dual density (charfn of the input scaled to unit mass). */
qp_status qp_grid_dual(const qp_grid* in, double extent, int points, qp_grid** out);
qp_status qp_grid_linnik(double alpha, double extent, int points, qp_grid** out);
qp_status qp_grid_to_csv(const qp_grid* g, char** csv_out);
qp_status qp_grid_to_json(const qp_grid* g, char** json_out);
void qp_grid_free(qp_grid* g);

/* Verification suites: series, transforms, mixtures, quasibayes, wigner, all.
 * tol_override > 0 replaces every check's tolerance. all_pass gets 1/0. */
qp_status qp_verify(const char* suite, double tol_override, char** json_out, int* all_pass);

/* Half-coin pgf coefficients as CSV (index,coefficient). */
qp_status qp_halfcoin_csv(int order, char** csv_out);

/* Feynman's conditional table marginals. format: "csv" or "json". */
qp_status qp_feynman(const char* format, char** out);

/* Heat-equation sine series at time t. init: "bump" or "sine". */
qp_status qp_diffusion_csv(const char* init, double t, int points, char** csv_out);

/* Wigner function matrix CSV. state: gaussian, hermite1, squeezed:<sigma>.
 * points is per axis (odd). */
qp_status qp_wigner_csv(const char* state, int points, char** csv_out);

/* Complete-monotonicity report for a named function: exp, exp_sqrt,
 * geometric, gauss. pass gets 1/0 (a failing function is not an error). */
qp_status qp_cmtest(const char* fn_name, int order, char** json_out, int* pass);

#ifdef __cplusplus
}
#endif

#endif /* QUASIPROB_H */
