// Exact Taylor/Fourier coefficients of f_{n,lambda}(z) = b_lambda^n(z)/(1-lambda z)
// and of the Dirichlet kernel D_n, via three independent engines with
// certified truncation tails:
//   Recurrence  - O(nN) power-series rounds, the default engine
//   ClosedForm  - exact rational (or adaptive big-float) single-coefficient oracle
//   FFT         - circle sampling + discrete transform, fast path for large N
#pragma once

#include <vector>

#include "phase.hpp"

namespace wl::coeffs {

enum class Family { BlaschkePower, Dirichlet };

struct TestFunction {
  Family family = Family::BlaschkePower;
  phase::LambdaParam lambda = phase::LambdaParam::from_double(0.0);
  long n = 0;  // Blaschke exponent (f_n = b^n/(1-lambda z)) or Dirichlet order
};

enum class Engine { Recurrence, ClosedForm, FFT };

/// Truncated coefficient sequence with a certified l^1 tail bound.
///
/// tail_bound dominates sum_{k>N} |c(k)| (Cauchy estimate, safety factor 2).
/// fp_l2_error bounds the l^2 norm of the error vector of the stored
/// coefficients themselves: each recurrence round is multiplication by the
/// inner factor b_lambda, an H^2 isometry, so local round-off passes through
/// later rounds without amplification; the model charges 8 eps per round on
/// the invariant stage norm 1/sqrt(1-lambda^2).
struct Spectrum {
  std::vector<double> c;
  long truncation = 0;
  double tail_bound = 0.0;
  double alias_bound = 0.0;  // FFT engine: per-coefficient aliasing bound
  double fp_l2_error = 0.0;
  Engine engine = Engine::Recurrence;
  int precision_bits = 53;
  Family family = Family::BlaschkePower;
  double lambda = 0.0;
  long n = 0;

  double l1_partial() const;    // compensated sum of |c(k)|
  double l2sq_partial() const;  // compensated sum of c(k)^2
};

struct Limits {
  long max_truncation = 1L << 23;
  long oracle_n_cap = 2000;
};
Limits& limits();

Spectrum coeffs_recurrence(const TestFunction& tf, long trunc);

/// Single-coefficient closed-form oracle
///   c(k) = sum_{j=0}^{min(n,k)} C(n,j) (-lambda)^{n-j} C(k-j+n, n) lambda^{k-j},
/// evaluated in exact rational arithmetic when lambda is rational, otherwise
/// with big-float precision raised until 30 significant digits are stable.
double coeff_closed_form(const TestFunction& tf, long k);

Spectrum coeffs_closed_form(const TestFunction& tf, long trunc);

Spectrum coeffs_fft(const TestFunction& tf, long trunc, int oversample = 8,
                    double alias_tol = 1e-11);

/// Cauchy tail estimate M(rho) rho^{-N} / (1 - 1/rho) with
/// M(rho) = 2 * max over sampled points of |f| on |z| = rho.
double tail_bound_of(const TestFunction& tf, long trunc, double rho,
                     int samples = 64);

/// tail_bound_of minimized over a radius grid in (1, 1/lambda).
double tail_bound_best(const TestFunction& tf, long trunc);

Spectrum dirichlet_coeffs(long n);

/// Smallest truncation whose certified l^1 tail is below
/// l1_rel_tol * (partial l^1 sum), then the spectrum at that truncation.
Spectrum auto_spectrum(const TestFunction& tf, double l1_rel_tol = 1e-9,
                       Engine engine = Engine::Recurrence);

}  // namespace wl::coeffs
