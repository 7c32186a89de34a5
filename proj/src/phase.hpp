// Phase geometry of the coefficient integral for f_{n,lambda}: the
// stationary angle phi(t), the argument psi(t) of 1 - lambda e^{i phi},
// the accumulated phase F(t), the amplitude weight r(t), and their
// derivative identities.
#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "fpx.hpp"

namespace wl::phase {

/// Validated pole parameter lambda in [0,1) with alpha = (1-lambda)/(1+lambda).
/// When constructed from a decimal string (or an exactly representable
/// double) it also carries lambda as a reduced rational p/q with q <= 10^6,
/// which the closed-form coefficient oracle uses for exact arithmetic.
class LambdaParam {
 public:
  static LambdaParam from_decimal(std::string_view s);
  static LambdaParam from_double(double v);

  double value() const { return lambda_; }
  double alpha() const { return alpha_; }
  bool is_rational() const { return den_ > 0; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  const std::string& decimal() const { return decimal_; }

 private:
  LambdaParam(double lambda, std::int64_t num, std::int64_t den,
              std::string decimal);

  double lambda_ = 0.0;
  double alpha_ = 1.0;
  std::int64_t num_ = 0;
  std::int64_t den_ = 0;  // 0: no exact rational attached
  std::string decimal_;
};

/// Full phase record at scaled frequency t = k/n.
struct PhasePoint {
  double t;
  double q;              // cos(phi)
  double phi;            // in (0, pi)
  double psi;            // in (-pi/2, 0)
  double big_f;          // F = phi - t phi - 2 psi
  double r;              // sqrt((t-alpha)(1/alpha-t))
  double phi_prime;      // -1/(t r)
  double psi_prime;      // (t-1)/(2 r t)
  double big_f_prime;    // -phi
  double big_f_second;   // 1/(t r)
};

/// q(t) = (1+l^2)/(2l) - (1-l^2)/(2lt); lies in (-1,1) for t in (alpha, 1/alpha).
double q_of(const LambdaParam& p, double t);

PhasePoint phase_point(const LambdaParam& p, double t);

/// h_t(s) = arg(b_lambda(e^{is})) - t s, continuous on [0,pi] with h_t(0) = 0.
double h_eval(const LambdaParam& p, double t, double s);

/// d/ds of h_t at s (independent of the t s term only through the constant -t).
double h_prime(const LambdaParam& p, double t, double s);

/// h''(s) = -2 l (1-l^2) sin s / (1 + l^2 - 2 l cos s)^2; independent of t.
double h_second(const LambdaParam& p, double s);

/// Stationary points z± = e^{±i phi(t)} of Phi(z) = log(z^{-t} b_lambda(z)),
/// with Phi''(z±) in closed form.  grad_residual is max |Phi'(z±)| measured
/// by central differences of the explicit Phi; construction fails if it
/// exceeds tol.
struct StationaryPoints {
  std::complex<double> z_plus, z_minus;
  std::complex<double> phi2_plus, phi2_minus;
  double grad_residual;
};
StationaryPoints stationary_points(const LambdaParam& p, double t,
                                   double tol = 1e-10);

/// Phi(z) = -t Log z + Log(z - lambda) - Log(1 - lambda z), principal logs.
/// Used by the stationary-point residual check and its tests.
std::complex<double> phi_explicit(const LambdaParam& p, double t,
                                  std::complex<double> z);

/// Working precision for the phase-critical paths.  n F(t) is reduced mod
/// 2 pi for n up to 10^6, so an absolute error delta in F becomes n*delta;
/// binary128 keeps the reduced phase below 1e-6 error with orders of margin.
enum class Precision { f64 = 53, f80 = 64, f128 = 113 };

Precision precision_from_bits(int bits);

/// frac((n F(k/n) - psi(k/n) - pi/4) / (2 pi)) in [0,1).
double phase_frac_cycles(const LambdaParam& p, long n, long k, Precision prec);

/// (n F(k/n) - psi(k/n) - pi/4) mod 2 pi, in [0, 2 pi).
double phase_mod_2pi(const LambdaParam& p, long n, long k, Precision prec);

namespace detail {

template <class T>
struct Geometry {
  T q, phi, psi, big_f, r;
};

/// Core kernel shared by the double and extended instantiations.
/// Throws OutOfRangeT when t is outside (alpha, 1/alpha).
template <class T>
Geometry<T> geometry(T lambda, T alpha, T t) {
  using namespace wl::fpx;
  const T one = T(1);
  T q = (one + lambda * lambda) / (2 * lambda) -
        (one - lambda * lambda) / (2 * lambda * t);
  T rsq = (t - alpha) * (one / alpha - t);
  if (!(rsq > T(0)))
    throw OutOfRangeT("t outside (alpha, 1/alpha): r would be imaginary");
  Geometry<T> g;
  g.q = q;
  g.r = fp_sqrt(rsq);
  g.phi = fp_acos(q);
  g.psi = fp_atan(-g.r / (t + one));
  g.big_f = g.phi - t * g.phi - 2 * g.psi;
  return g;
}

template <class T>
T frac_phase_cycles(T lambda, T alpha, long n, long k) {
  using namespace wl::fpx;
  const T t = T(k) / T(n);
  Geometry<T> g = geometry(lambda, alpha, t);
  T cycles = (T(n) * g.big_f - g.psi - pi_v<T> / 4) / (2 * pi_v<T>);
  return fp_frac(cycles);
}

}  // namespace detail

}  // namespace wl::phase
