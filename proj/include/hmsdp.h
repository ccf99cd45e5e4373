/*
 * hmsdp - mirror-correspondence verification toolkit for Del Pezzo surfaces.
 *
 * C interface over the C++ core: opaque session handle, status codes, and
 * JSON documents for the structured results.  Every returned string is
 * heap-allocated by the library and must be released with hmsdp_free().
 */
#ifndef HMSDP_H
#define HMSDP_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hmsdp_status {
    HMSDP_OK = 0,
    HMSDP_ERR_INVALID_ARGUMENT = 1, /* bad parameter or malformed JSON input */
    HMSDP_ERR_NONCONVERGENT = 2,    /* series outside its convergence domain */
    HMSDP_ERR_TOLERANCE = 3,        /* term cap hit before tolerance reached */
    HMSDP_ERR_DEGENERATE = 4,       /* degenerate class/points for this call */
    HMSDP_ERR_AMBIGUOUS = 5,        /* numerical rank decision failed */
    HMSDP_ERR_UNSUPPORTED = 6,      /* operation undefined for this input */
    HMSDP_ERR_INTERNAL = 7
} hmsdp_status;

/* A session carries the run configuration (tolerance, series term cap, seed)
 * and the text of the last error.  Sessions are cheap; use one per thread. */
typedef struct hmsdp_session hmsdp_session;

hmsdp_session* hmsdp_session_new(void);
void hmsdp_session_free(hmsdp_session* s);

/* Message of the last failing call on this session ("" if none). */
const char* hmsdp_last_error(const hmsdp_session* s);

hmsdp_status hmsdp_set_tolerance(hmsdp_session* s, double tol);       /* > 0, default 1e-8  */
hmsdp_status hmsdp_set_max_terms(hmsdp_session* s, long max_terms);   /* >= 64, default 1e5 */
hmsdp_status hmsdp_set_min_window(hmsdp_session* s, long min_window); /* >= 1, default 8    */
hmsdp_status hmsdp_set_seed(hmsdp_session* s, unsigned long seed);

void hmsdp_free(char* text);

/*
 * JSON commands.  kaehler_json is the universal input document
 *   {"k": int, "tau": {"re": f, "im": f}, "cbar": {...}, "c": [{...}, ...]}
 * with Im(tau) > 0 and exactly k entries in "c".
 */

/* Full mirror certificate; out document carries "pass", "flags", "checks". */
hmsdp_status hmsdp_verify_json(hmsdp_session* s, const char* kaehler_json, char** out);

/* Composition table, quiver algebra and mirror data; side is "fukaya",
 * "quiver" or "both". */
hmsdp_status hmsdp_tables_json(hmsdp_session* s, const char* kaehler_json, const char* side,
                               char** out);

/* Dehn-twist matrices and the monodromy relation. */
hmsdp_status hmsdp_monodromy_json(hmsdp_session* s, char** out);

/* Exact flat-torus verification report for a model with k blown-up cycles. */
hmsdp_status hmsdp_oracle_json(hmsdp_session* s, int k, char** out);

/* Lattice degeneracy test over all pairs of blown-up classes. */
hmsdp_status hmsdp_degeneracy_json(hmsdp_session* s, const char* kaehler_json, char** out);

/*
 * Direct numeric entry points.
 */

/* theta_{a,b}(z, tau) with rational characteristics a = a_num/a_den,
 * b = b_num/b_den; value written to out_re/out_im, truncation metadata to
 * terms_used/tail_bound (either may be NULL). */
hmsdp_status hmsdp_theta(hmsdp_session* s, long a_num, long a_den, long b_num, long b_den,
                         double z_re, double z_im, double tau_re, double tau_im, double* out_re,
                         double* out_im, long* terms_used, double* tail_bound);

/* The three series at (qX, qF); out holds plus, minus, zero as re/im pairs. */
hmsdp_status hmsdp_zeta_triple(hmsdp_session* s, double qx_re, double qx_im, double qf_re,
                               double qf_im, double out[6]);

/* Scalar degeneration factor at (qprime, qF); normalized_abs (optional)
 * receives |value| divided by the gross series scale. */
hmsdp_status hmsdp_degeneration_factor(hmsdp_session* s, double qp_re, double qp_im, double qf_re,
                                       double qf_im, double* out_re, double* out_im,
                                       double* normalized_abs);

#ifdef __cplusplus
}
#endif

#endif /* HMSDP_H */
