// The equidistribution machinery behind the sharpness lower bound: the
// window parameter beta, the weighted sums M and X, the fractional phases
// s_{n,k}, partial Weyl sums A_{n,j,m}, the weighted exponential sum Y, and
// the van der Corput bound check.
#pragma once

#include <complex>
#include <vector>

#include "phase.hpp"

namespace wl::equidist {

/// Window [beta, 1/beta] with
///   int_beta^{1/beta} dt/[(1/alpha - t)(t - alpha)]^{1/4}
///     = Gamma(3/4)^2 / sqrt(1-lambda).
struct WindowConfig {
  double lambda = 0.0;
  double alpha = 1.0;
  double beta = 0.0;
  double target = 0.0;
  double residual = 0.0;
};

/// int_beta^{1/beta} dt / [(1/alpha - t)(t - alpha)]^{1/4}; the integrand is
/// smooth on the window (the quarter-power singularities sit strictly outside).
double window_integral(const phase::LambdaParam& p, double beta);

/// The full singular integral int_alpha^{1/alpha}; endpoint singularities are
/// removed by the substitution t = alpha + u^4 (resp. 1/alpha - u^4) on the
/// two halves.
double full_window_integral(const phase::LambdaParam& p);

/// Closed form (2 Gamma(3/4))^2 sqrt(lambda / (pi (1 - lambda^2))).
double full_window_closed_form(const phase::LambdaParam& p);

/// Bisection on beta; solver tolerance 1e-10 on the integral value.
/// Signals NoRoot when the full-window integral is below the target (which
/// cannot happen for lambda >= 1/2).
WindowConfig beta_solve(const phase::LambdaParam& p, double tol = 1e-10);

struct IndexWindow {
  long lo = 0, hi = -1;
  bool empty() const { return lo > hi; }
  long size() const { return empty() ? 0 : hi - lo + 1; }
};

/// I_n = Z cap [beta n, n / beta].
IndexWindow index_window(const WindowConfig& w, long n);

/// s_{n,k} = frac((n F(k/n) - psi(k/n) - pi/4)/(2 pi)).
double s_frac(const phase::LambdaParam& p, const WindowConfig& w, long n,
              long k, phase::Precision prec = phase::Precision::f128);

/// All s_{n,k} for k in I_n, plus the weights 1/sqrt(r(k/n)).
struct WindowSamples {
  IndexWindow window;
  std::vector<double> s;       // fractional phases, in [0,1)
  std::vector<double> weight;  // [(1/alpha-t)(t-alpha)]^{-1/4}
};
WindowSamples window_samples(const phase::LambdaParam& p, const WindowConfig& w,
                             long n, phase::Precision prec);

struct SumStats {
  double big_m = 0.0;
  double big_x = 0.0;
};

/// M = sum of weights; X = sum of |cos(2 pi s_{n,k})| * weight.
SumStats big_mx(const phase::LambdaParam& p, const WindowConfig& w, long n,
                phase::Precision prec = phase::Precision::f128);

/// Partial Weyl sum A_{n,j,m} = sum_{l in I_n, l <= m} e^{2 pi i j s_{n,l}}.
std::complex<double> weyl_sum(const phase::LambdaParam& p,
                              const WindowConfig& w, long n, int j, long m,
                              phase::Precision prec = phase::Precision::f128);

struct EquidistReport {
  long n = 0;
  IndexWindow window;
  double big_m = 0.0;
  double big_x = 0.0;
  double ratio_xm = 0.0;
  std::vector<std::pair<int, double>> weyl_over_sqrt_n;  // j -> max_m|A|/sqrt(n)
  std::vector<std::pair<int, double>> y_over_m;          // j -> |Y_j|/M
};

EquidistReport report(const phase::LambdaParam& p, const WindowConfig& w,
                      long n, int j_max = 3,
                      phase::Precision prec = phase::Precision::f128);

/// |Y_j| = |sum_{k in I_n} e^{2 pi i j s_{n,k}} / sqrt(r(k/n))|.
double weighted_exp_sum(const phase::LambdaParam& p, const WindowConfig& w,
                        long n, int j,
                        phase::Precision prec = phase::Precision::f128);

/// van der Corput shape check for theta(x) = j (n F(x/n) - psi(x/n) - pi/4)/(2 pi):
/// mu = min |theta''| over the window, the theta' span, and the smallest C
/// with max_m |A_{n,j,m}| <= (span + 2)(4/sqrt(mu) + C).
struct VdcReport {
  double mu = 0.0;
  double theta_prime_span = 0.0;
  double theta_prime_max = 0.0;
  double fitted_c = 0.0;
  double max_abs_sum = 0.0;
};

VdcReport vdc_bound_check(const phase::LambdaParam& p, const WindowConfig& w,
                          long n, int j,
                          phase::Precision prec = phase::Precision::f128);

}  // namespace wl::equidist
