#include "phase.hpp"

#include <cctype>
#include <cmath>
#include <numeric>

namespace wl::phase {

namespace {

constexpr double kPi = fpx::pi_v<double>;

void check_lambda_positive(const LambdaParam& p) {
  if (p.value() == 0.0)
    throw DegenerateLambda("lambda = 0: q(t) has a 1/lambda singularity");
}

/// Best rational p/q with q <= max_den that reproduces v exactly, via
/// continued fractions; returns false when none exists.
bool exact_rational(double v, std::int64_t max_den, std::int64_t* num,
                    std::int64_t* den) {
  double x = v;
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double a_f = std::floor(x);
    if (a_f > 9e18) break;
    std::int64_t a = static_cast<std::int64_t>(a_f);
    std::int64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 <= 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = x - a_f;
    if (rem == 0.0) break;
    x = 1.0 / rem;
  }
  if (q1 <= 0) return false;
  if (static_cast<double>(p1) / static_cast<double>(q1) != v) return false;
  *num = p1;
  *den = q1;
  return true;
}

}  // namespace

LambdaParam::LambdaParam(double lambda, std::int64_t num, std::int64_t den,
                         std::string decimal)
    : lambda_(lambda),
      alpha_((1.0 - lambda) / (1.0 + lambda)),
      num_(num),
      den_(den),
      decimal_(std::move(decimal)) {}

LambdaParam LambdaParam::from_decimal(std::string_view s) {
  // Accepted shape: [+] digits [. digits]; value must lie in [0, 1).
  std::string text(s);
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '+') ++pos;
  std::string int_part, frac_part;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    int_part += text[pos++];
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      frac_part += text[pos++];
  }
  if (pos != text.size() || (int_part.empty() && frac_part.empty()))
    throw InvalidArgument("lambda: not a plain decimal: '" + text + "'");

  double v = std::strtod(text.c_str(), nullptr);
  if (!(v >= 0.0 && v < 1.0))
    throw InvalidArgument("lambda must lie in [0,1): '" + text + "'");

  // Exact rational p/10^d, reduced; kept only when the reduced q <= 10^6.
  std::int64_t num = 0, den = 0;
  std::string digits = int_part + frac_part;
  if (digits.size() <= 18) {
    std::int64_t p = 0;
    for (char c : digits) p = p * 10 + (c - '0');
    std::int64_t q = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < frac_part.size(); ++i) {
      if (q > (std::int64_t{1} << 60) / 10) {
        overflow = true;
        break;
      }
      q *= 10;
    }
    if (!overflow) {
      std::int64_t g = std::gcd(p, q);
      p /= g;
      q /= g;
      if (q <= 1000000) {
        num = p;
        den = q;
        // the reduced rational is the authoritative value
        v = static_cast<double>(p) / static_cast<double>(q);
      }
    }
  }
  return LambdaParam(v, num, den, text);
}

LambdaParam LambdaParam::from_double(double v) {
  if (!(v >= 0.0 && v < 1.0))
    throw InvalidArgument("lambda must lie in [0,1)");
  std::int64_t num = 0, den = 0;
  if (!exact_rational(v, 1000000, &num, &den)) {
    num = 0;
    den = 0;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return LambdaParam(v, num, den, buf);
}

double q_of(const LambdaParam& p, double t) {
  check_lambda_positive(p);
  if (!(t > 0.0)) throw NonpositiveT("q(t) requires t > 0");
  const double l = p.value();
  return (1.0 + l * l) / (2.0 * l) - (1.0 - l * l) / (2.0 * l * t);
}

PhasePoint phase_point(const LambdaParam& p, double t) {
  check_lambda_positive(p);
  if (!(t > 0.0)) throw NonpositiveT("phase_point requires t > 0");
  auto g = detail::geometry<double>(p.value(), p.alpha(), t);
  PhasePoint pp;
  pp.t = t;
  pp.q = g.q;
  pp.phi = g.phi;
  pp.psi = g.psi;
  pp.big_f = g.big_f;
  pp.r = g.r;
  pp.phi_prime = -1.0 / (t * g.r);
  pp.psi_prime = (t - 1.0) / (2.0 * g.r * t);
  pp.big_f_prime = -g.phi;
  pp.big_f_second = 1.0 / (t * g.r);
  return pp;
}

double h_eval(const LambdaParam& p, double t, double s) {
  check_lambda_positive(p);
  if (!(s >= 0.0 && s <= kPi))
    throw InvalidArgument("h_eval requires s in [0, pi]");
  const double l = p.value();
  // arg(b_lambda(e^{is})) = s - 2 arg(1 - lambda e^{is}); both branches are
  // continuous on [0, pi] (1 - lambda e^{is} keeps a positive real part),
  // so h(0) = 0 holds without explicit unwrapping.
  double u = std::atan2(-l * std::sin(s), 1.0 - l * std::cos(s));
  return (1.0 - t) * s - 2.0 * u;
}

double h_prime(const LambdaParam& p, double t, double s) {
  check_lambda_positive(p);
  const double l = p.value();
  return (1.0 - l * l) / (1.0 + l * l - 2.0 * l * std::cos(s)) - t;
}

double h_second(const LambdaParam& p, double s) {
  if (!(s >= 0.0 && s <= kPi))
    throw InvalidArgument("h_second requires s in [0, pi]");
  const double l = p.value();
  const double d = 1.0 + l * l - 2.0 * l * std::cos(s);
  return -2.0 * l * (1.0 - l * l) * std::sin(s) / (d * d);
}

std::complex<double> phi_explicit(const LambdaParam& p, double t,
                                  std::complex<double> z) {
  const double l = p.value();
  return -t * std::log(z) + std::log(z - l) - std::log(1.0 - l * z);
}

StationaryPoints stationary_points(const LambdaParam& p, double t,
                                   double tol) {
  PhasePoint pp = phase_point(p, t);
  const double l = p.value();
  const std::complex<double> i(0.0, 1.0);
  StationaryPoints sp;
  sp.z_plus = std::exp(i * pp.phi);
  sp.z_minus = std::conj(sp.z_plus);

  auto second = [&](std::complex<double> zp, std::complex<double> zm) {
    std::complex<double> num = (1.0 - l * l) * (zp - zm) * l;
    std::complex<double> den = (zp - l) * (zp - l) * (1.0 - l * zp) * (1.0 - l * zp);
    return num / den;
  };
  sp.phi2_plus = second(sp.z_plus, sp.z_minus);
  sp.phi2_minus = second(sp.z_minus, sp.z_plus);

  // Independent gradient check: central difference of the explicit Phi along
  // the tangential direction at each stationary point.
  double residual = 0.0;
  for (std::complex<double> z : {sp.z_plus, sp.z_minus}) {
    std::complex<double> h = 1e-6 * i * z;
    std::complex<double> d =
        (phi_explicit(p, t, z + h) - phi_explicit(p, t, z - h)) / (2.0 * h);
    residual = std::max(residual, std::abs(d));
  }
  sp.grad_residual = residual;
  if (!(residual < tol))
    throw CertificationFailure(
        "stationary-point residual |Phi'(z±)| above tolerance");
  return sp;
}

Precision precision_from_bits(int bits) {
  if (bits <= 53) return Precision::f64;
  if (bits <= 64) return Precision::f80;
  return Precision::f128;
}

double phase_frac_cycles(const LambdaParam& p, long n, long k,
                         Precision prec) {
  check_lambda_positive(p);
  if (n <= 0) throw InvalidArgument("phase_frac_cycles requires n >= 1");
  switch (prec) {
    case Precision::f64:
      return detail::frac_phase_cycles<double>(p.value(), p.alpha(), n, k);
    case Precision::f80:
      return static_cast<double>(detail::frac_phase_cycles<long double>(
          p.value(), p.alpha(), n, k));
    case Precision::f128:
    default: {
      __float128 l = p.value();
      __float128 a = p.alpha();
      if (p.is_rational()) {
        // reconstruct lambda and alpha exactly from p/q to avoid feeding the
        // double rounding error into the n*F amplification
        l = __float128(p.num()) / __float128(p.den());
        a = (__float128(1) - l) / (__float128(1) + l);
      }
      return static_cast<double>(
          detail::frac_phase_cycles<__float128>(l, a, n, k));
    }
  }
}

double phase_mod_2pi(const LambdaParam& p, long n, long k, Precision prec) {
  return phase_frac_cycles(p, n, k, prec) * 2.0 * kPi;
}

}  // namespace wl::phase
