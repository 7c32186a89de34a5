// Leading-order stationary-phase evaluation of the coefficients, the
// oscillatory-integral oracle for the circle representation
//   c(k) = (1/pi) Re int_0^pi e^{i n h_t(s)} / (1 - lambda e^{is}) ds,
// and the error profile of the prediction over the frequency window.
#pragma once

#include <complex>
#include <vector>

#include "coeffs.hpp"
#include "equidist.hpp"

namespace wl::asym {

struct AsymptoticRecord {
  long n = 0, k = 0;
  double t = 0.0;
  double predicted = 0.0;
  double exact = 0.0;
  double abs_err = 0.0;
  double scaled_err = 0.0;  // n * abs_err
  double amplitude = 0.0;   // prefactor without the cosine
  double phase_mod_2pi = 0.0;
};

/// predicted = sqrt(2/(n (1-l^2) pi)) cos(n F(t) - psi(t) - pi/4)
///             / [(1/alpha - t)(t - alpha)]^{1/4},  t = k/n.
/// `exact` comes from the closed-form oracle when n <= oracle cap and lambda
/// is rational, otherwise from a certified recurrence spectrum.
/// Requires lambda in [1/2, 1) and k/n in [beta, 1/beta].
AsymptoticRecord theorem3_coeff(const phase::LambdaParam& p,
                                const equidist::WindowConfig& w, long n, long k,
                                const coeffs::Spectrum* exact_src = nullptr,
                                phase::Precision prec = phase::Precision::f128);

AsymptoticRecord theorem3_coeff(const phase::LambdaParam& p, long n, long k,
                                phase::Precision prec = phase::Precision::f128);

struct QuadConfig {
  double abs_tol = 1e-10;
  double nodes_per_period = 10.0;
  std::size_t max_evals = 20'000'000;
};

/// Adaptive oscillatory quadrature of the circle representation; the result
/// is certified to quad.abs_tol or ResolutionInsufficient is raised.
double oscillatory_oracle(const phase::LambdaParam& p, long n, long k,
                          const QuadConfig& quad = {});

/// Largest gamma with phi(t) in [gamma, pi - gamma] over the whole window.
double choose_gamma(const phase::LambdaParam& p,
                    const equidist::WindowConfig& w);

/// Smooth bump from e^{-1/x} glue: 1 on [gamma/2, pi - gamma/2], 0 outside
/// [gamma/4, pi - gamma/4].
double cutoff_nu(double s, double gamma);

struct CutoffConfig {
  double gamma = 0.0;  // 0: derive the largest admissible value
};

struct FedoryukResult {
  std::complex<double> leading;  // stationary-phase leading term of J(n,t)
  std::complex<double> numeric;  // quadrature value of J(n,t)
  double gamma = 0.0;
  double quad_err = 0.0;
};

/// J(n,t) = int nu(s) e^{i n h~(s)} / (1 - lambda e^{-is}) ds with h~ = -h;
/// leading term e^{i(-n F + pi/4 + psi)} sqrt(2 pi/(n(1-l^2))) r^{-1/2}.
FedoryukResult fedoryuk_leading(const phase::LambdaParam& p, long n, double t,
                                CutoffConfig cfg = {});

/// int_0^{gamma/2} (1 - nu) g e^{i n h~} ds: the endpoint piece controlled by
/// integration by parts; decays like O(1/n).
std::complex<double> endpoint_piece(const phase::LambdaParam& p, long n,
                                    double t, double gamma);

/// Records for every k in I_n, exact values from one shared recurrence
/// spectrum; parallel over k.
std::vector<AsymptoticRecord> error_profile(
    const phase::LambdaParam& p, long n,
    phase::Precision prec = phase::Precision::f128);

}  // namespace wl::asym
