/* wienerlab C API
 *
 * Shared-library interface to the wienerlab core: exact Fourier/Taylor
 * coefficients of f_{n,lambda}(z) = b_lambda^n(z)/(1 - lambda z) where
 * b_lambda(z) = (z - lambda)/(1 - lambda z), Wiener/Hardy norm reports,
 * stationary-phase predictions for the coefficients, and the
 * equidistribution statistics behind the sharpness experiment.
 *
 * All functions are thread-safe; handles are immutable after creation and
 * may be shared across threads.  Every fallible call either takes a
 * wl_status* out-parameter or returns a wl_status.  A human-readable
 * message for the most recent failure on the calling thread is available
 * via wl_last_error().
 */
#ifndef WIENERLAB_H
#define WIENERLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wl_status {
  WL_OK = 0,
  WL_E_CONFIG = 1,             /* malformed run configuration */
  WL_E_CERTIFICATION = 2,      /* an invariant suite failed */
  WL_E_CAPACITY = 3,           /* requested truncation above configured cap */
  WL_E_DEGENERATE_LAMBDA = 4,  /* lambda = 0: phase geometry undefined */
  WL_E_NONPOSITIVE_T = 5,
  WL_E_OUT_OF_RANGE_T = 6,     /* t outside (alpha, 1/alpha) */
  WL_E_OUT_OF_WINDOW = 7,      /* k/n outside [beta, 1/beta] */
  WL_E_INVALID_RADIUS = 8,     /* Cauchy radius not in (1, 1/lambda) */
  WL_E_PRECISION_EXHAUSTED = 9,
  WL_E_ORACLE_CAP = 10,        /* closed-form oracle n cap exceeded */
  WL_E_ALIASING = 11,          /* FFT alias bound above requested tolerance */
  WL_E_UNCERTIFIED_TAIL = 12,
  WL_E_EMPTY_WINDOW = 13,      /* I_n contains no integer */
  WL_E_ZERO_FREQUENCY = 14,    /* Weyl frequency j = 0 */
  WL_E_NO_ROOT = 15,           /* window equation has no solution */
  WL_E_CUTOFF_INVALID = 16,
  WL_E_RESOLUTION = 17,        /* oscillatory quadrature could not certify */
  WL_E_INVALID_ARGUMENT = 18,
  WL_E_IO = 19,
  WL_E_INTERNAL = 20
} wl_status;

/* Stable name of a status code ("ok", "out_of_window", ...). */
const char* wl_status_name(wl_status st);

/* Message for the most recent failure on this thread; empty string if none. */
const char* wl_last_error(void);

int wl_version_major(void);
int wl_version_minor(void);
int wl_version_patch(void);

/* ---- pole parameter ------------------------------------------------- */

/* Opaque validated pole parameter: lambda in [0,1) with
 * alpha = (1-lambda)/(1+lambda).  The decimal-string constructor also
 * retains lambda as an exact rational p/q (q <= 10^6) when possible, which
 * the closed-form coefficient oracle uses for exact arithmetic. */
typedef struct wl_lambda wl_lambda;

wl_lambda* wl_lambda_parse(const char* decimal, wl_status* st);
wl_lambda* wl_lambda_from_double(double value, wl_status* st);
void wl_lambda_free(wl_lambda* p);
double wl_lambda_value(const wl_lambda* p);
double wl_lambda_alpha(const wl_lambda* p);
/* 1 if an exact rational representation p/q (q <= 10^6) is attached. */
int wl_lambda_is_rational(const wl_lambda* p);

/* ---- phase geometry -------------------------------------------------- */

/* Full phase record at scaled frequency t = k/n:
 *   q    = (1+l^2)/(2l) - (1-l^2)/(2lt)
 *   phi  = arccos(q) in (0,pi)             (stationary angle)
 *   psi  = arctan(-r/(t+1)) in (-pi/2,0)
 *   F    = phi - t*phi - 2*psi             (accumulated phase)
 *   r    = sqrt((t-alpha)(1/alpha-t))
 * together with the derivative identities phi' = -1/(t r),
 * psi' = (t-1)/(2 r t), F' = -phi, F'' = 1/(t r). */
typedef struct wl_phase_point {
  double t;
  double q;
  double phi;
  double psi;
  double big_f;
  double r;
  double phi_prime;
  double psi_prime;
  double big_f_prime;
  double big_f_second;
} wl_phase_point;

wl_status wl_phase_eval(const wl_lambda* p, double t, wl_phase_point* out);
wl_status wl_phase_q(const wl_lambda* p, double t, double* out);
/* h_t(s) = arg(b_lambda(e^{is})) - t s, continuous with h_t(0) = 0. */
wl_status wl_phase_h(const wl_lambda* p, double t, double s, double* out);
/* h''(s); independent of t. */
wl_status wl_phase_h_second(const wl_lambda* p, double s, double* out);

/* ---- coefficient engines --------------------------------------------- */

typedef enum wl_family {
  WL_FAMILY_BLASCHKE_POWER = 0,
  WL_FAMILY_DIRICHLET = 1
} wl_family;

typedef enum wl_engine {
  WL_ENGINE_AUTO = -1,
  WL_ENGINE_RECURRENCE = 0,
  WL_ENGINE_CLOSED_FORM = 1,
  WL_ENGINE_FFT = 2
} wl_engine;

/* Opaque truncated coefficient sequence with a certified l^1 tail bound. */
typedef struct wl_spectrum wl_spectrum;

/* Computes coefficients 0..trunc of the requested family.  trunc = -1
 * selects the smallest truncation whose certified l^1 tail is below
 * 1e-9 times the partial l^1 sum.  lambda may be NULL for the Dirichlet
 * family. */
wl_spectrum* wl_spectrum_compute(const wl_lambda* p, wl_family family, long n,
                                 long trunc, wl_engine engine, wl_status* st);
void wl_spectrum_free(wl_spectrum* s);
long wl_spectrum_size(const wl_spectrum* s); /* truncation + 1 */
double wl_spectrum_coeff(const wl_spectrum* s, long k);
double wl_spectrum_tail_bound(const wl_spectrum* s);
wl_engine wl_spectrum_engine(const wl_spectrum* s);
int wl_spectrum_precision_bits(const wl_spectrum* s);

/* Closed-form oracle for a single coefficient (exact rational arithmetic
 * when lambda is rational, adaptive big-float otherwise). */
wl_status wl_coeff_exact(const wl_lambda* p, long n, long k, double* out);

/* ---- norms ------------------------------------------------------------ */

typedef struct wl_norm_report {
  double lambda;
  long n;
  double l1_lo, l1_hi;
  double l2_lo, l2_hi;
  double ratio_lo, ratio_hi;       /* l1 / l2 */
  double constant_lo, constant_hi; /* ratio / sqrt(n/(1-lambda)) */
  double partial_l1_window;        /* sum over I_n of |c(k)|; 0 if no window */
} wl_norm_report;

wl_status wl_nikolskii(const wl_lambda* p, wl_family family, long n,
                       wl_norm_report* out);

/* ---- window / equidistribution ---------------------------------------- */

typedef struct wl_window {
  double lambda;
  double alpha;
  double beta;
  double target;   /* Gamma(3/4)^2 / sqrt(1-lambda) */
  double residual; /* |window integral - target| at the solved beta */
} wl_window;

wl_status wl_beta_solve(const wl_lambda* p, wl_window* out);

typedef struct wl_equidist_stats {
  long n;
  long k_lo, k_hi; /* I_n = [k_lo, k_hi] */
  double big_m;
  double big_x;
  double ratio_xm;
} wl_equidist_stats;

wl_status wl_equidist(const wl_lambda* p, long n, wl_equidist_stats* out);

/* s_{n,k} = frac((n F(k/n) - psi(k/n) - pi/4)/(2 pi)), extended precision. */
wl_status wl_s_frac(const wl_lambda* p, long n, long k, double* out);

/* Weyl statistics at frequency j != 0:
 * max over m in I_n of |A_{n,j,m}|/sqrt(n), and |Y_j|/M. */
wl_status wl_weyl(const wl_lambda* p, long n, int j, double* max_over_sqrt_n,
                  double* y_over_m);

/* ---- stationary-phase asymptotics -------------------------------------- */

typedef struct wl_asym_record {
  long n, k;
  double t;
  double predicted; /* leading stationary-phase term */
  double exact;     /* from the exact engine */
  double abs_err;
  double scaled_err; /* n * abs_err */
  double amplitude;  /* prefactor without the cosine */
  double phase_mod_2pi;
} wl_asym_record;

wl_status wl_theorem3(const wl_lambda* p, long n, long k, wl_asym_record* out);

/* Records for every k in I_n.  Call with buf = NULL to query the count. */
wl_status wl_error_profile(const wl_lambda* p, long n, wl_asym_record* buf,
                           long cap, long* count);

/* ---- experiment runner -------------------------------------------------- */

/* Runs a full experiment described by a JSON configuration (the same schema
 * the command-line front end produces) and writes the requested artifacts.
 * Returns a process-style exit code: 0 success, 2 certification failure,
 * 3 capacity exceeded, 64 configuration error, 1 other error. */
int wl_run_json(const char* config_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WIENERLAB_H */
