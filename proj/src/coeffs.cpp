#include "coeffs.hpp"

#include <fftw3.h>
#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <mutex>

#include "kahan.hpp"

namespace wl::coeffs {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_blaschke(const TestFunction& tf, const char* op) {
  if (tf.family != Family::BlaschkePower)
    throw InvalidArgument(std::string(op) + ": only the Blaschke-power family");
  if (tf.n < 0) throw InvalidArgument(std::string(op) + ": n must be >= 0");
}

/// |f_n| on the circle |z| = rho, in logs to survive large n.
double log_abs_f(const TestFunction& tf, double rho, double theta) {
  const double l = tf.lambda.value();
  const std::complex<double> z = std::polar(rho, theta);
  const std::complex<double> num = z - l;
  const std::complex<double> den = 1.0 - l * z;
  return tf.n * (std::log(std::abs(num)) - std::log(std::abs(den))) -
         std::log(std::abs(den));
}

}  // namespace

Limits& limits() {
  static Limits lim;
  return lim;
}

double Spectrum::l1_partial() const {
  KahanSum s;
  for (double x : c) s += std::fabs(x);
  return s.value();
}

double Spectrum::l2sq_partial() const {
  KahanSum s;
  for (double x : c) s += x * x;
  return s.value();
}

Spectrum coeffs_recurrence(const TestFunction& tf, long trunc) {
  require_blaschke(tf, "coeffs_recurrence");
  if (trunc < 0) throw InvalidArgument("coeffs_recurrence: trunc must be >= 0");
  if (trunc > limits().max_truncation)
    throw CapacityExceeded("coeffs_recurrence: truncation above configured cap");

  const double l = tf.lambda.value();
  const std::size_t len = static_cast<std::size_t>(trunc) + 1;
  std::vector<double> c(len);
  // start from 1/(1-lambda z): geometric coefficients
  double g = 1.0;
  for (std::size_t k = 0; k < len; ++k) {
    c[k] = g;
    g *= l;
  }
  std::vector<double> tmp(len);
  for (long round = 0; round < tf.n; ++round) {
    // multiply by (z - lambda)
    for (std::size_t k = len; k-- > 1;) tmp[k] = c[k - 1] - l * c[k];
    tmp[0] = -l * c[0];
    // divide by (1 - lambda z): c_k = a_k + lambda c_{k-1}
    c[0] = tmp[0];
    for (std::size_t k = 1; k < len; ++k) c[k] = tmp[k] + l * c[k - 1];
  }

  Spectrum s;
  s.c = std::move(c);
  s.truncation = trunc;
  s.engine = Engine::Recurrence;
  s.precision_bits = 53;
  s.family = tf.family;
  s.lambda = l;
  s.n = tf.n;
  s.tail_bound = tail_bound_best(tf, trunc);
  s.fp_l2_error =
      8.0 * static_cast<double>(tf.n + 1) * kEps / std::sqrt(1.0 - l * l);
  return s;
}

namespace {

/// Exact rational evaluation: with lambda = p/q the k-th coefficient equals
///   [ sum_j (-1)^{n-j} C(n,j) C(k-j+n,n) p^{n+k-2j} q^{2j} ] / q^{n+k}.
double closed_form_rational(long n, long k, std::int64_t pnum,
                            std::int64_t pden) {
  mpz_t acc, term, pw;
  mpz_inits(acc, term, pw, nullptr);
  const long jmax = std::min(n, k);
  for (long j = 0; j <= jmax; ++j) {
    mpz_bin_uiui(term, static_cast<unsigned long>(n),
                 static_cast<unsigned long>(j));
    mpz_t b2;
    mpz_init(b2);
    mpz_bin_uiui(b2, static_cast<unsigned long>(k - j + n),
                 static_cast<unsigned long>(n));
    mpz_mul(term, term, b2);
    mpz_clear(b2);
    mpz_set_si(pw, pnum);
    mpz_pow_ui(pw, pw, static_cast<unsigned long>(n + k - 2 * j));
    mpz_mul(term, term, pw);
    mpz_set_si(pw, pden);
    mpz_pow_ui(pw, pw, static_cast<unsigned long>(2 * j));
    mpz_mul(term, term, pw);
    if ((n - j) % 2 != 0) mpz_neg(term, term);
    mpz_add(acc, acc, term);
  }
  mpfr_t num, den;
  mpfr_init2(num, 256);
  mpfr_init2(den, 256);
  mpfr_set_z(num, acc, MPFR_RNDN);
  mpz_set_si(pw, pden);
  mpz_pow_ui(pw, pw, static_cast<unsigned long>(n + k));
  mpfr_set_z(den, pw, MPFR_RNDN);
  mpfr_div(num, num, den, MPFR_RNDN);
  double out = mpfr_get_d(num, MPFR_RNDN);
  mpfr_clears(num, den, nullptr);
  mpz_clears(acc, term, pw, nullptr);
  return out;
}

/// Big-float fallback for non-rational lambda: raise the working precision
/// until two successive evaluations agree to 30 significant digits.
double closed_form_bigfloat(long n, long k, double lambda) {
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (mpfr_prec_t prec = 256; prec <= (1 << 16); prec *= 2) {
    mpfr_t acc, term, lam, t1;
    mpfr_inits2(prec, acc, term, lam, t1, nullptr);
    mpfr_set_zero(acc, 1);
    mpfr_set_d(lam, lambda, MPFR_RNDN);
    mpz_t bin;
    mpz_init(bin);
    const long jmax = std::min(n, k);
    for (long j = 0; j <= jmax; ++j) {
      mpz_bin_uiui(bin, static_cast<unsigned long>(n),
                   static_cast<unsigned long>(j));
      mpfr_set_z(term, bin, MPFR_RNDN);
      mpz_bin_uiui(bin, static_cast<unsigned long>(k - j + n),
                   static_cast<unsigned long>(n));
      mpfr_set_z(t1, bin, MPFR_RNDN);
      mpfr_mul(term, term, t1, MPFR_RNDN);
      mpfr_pow_ui(t1, lam, static_cast<unsigned long>(n + k - 2 * j), MPFR_RNDN);
      mpfr_mul(term, term, t1, MPFR_RNDN);
      if ((n - j) % 2 != 0) mpfr_neg(term, term, MPFR_RNDN);
      mpfr_add(acc, acc, term, MPFR_RNDN);
    }
    double out = mpfr_get_d(acc, MPFR_RNDN);
    mpz_clear(bin);
    mpfr_clears(acc, term, lam, t1, nullptr);
    if (std::isfinite(prev) || prev == 0.0) {
      double scale = std::max(std::fabs(out), std::fabs(prev));
      if (scale == 0.0 || std::fabs(out - prev) <= 1e-30 * scale) return out;
    }
    prev = out;
  }
  throw PrecisionExhausted(
      "coeff_closed_form: could not certify 30 digits for irrational lambda");
}

}  // namespace

double coeff_closed_form(const TestFunction& tf, long k) {
  if (k < 0) throw InvalidArgument("coeff_closed_form: k must be >= 0");
  if (tf.family == Family::Dirichlet) return k < tf.n ? 1.0 : 0.0;
  require_blaschke(tf, "coeff_closed_form");
  if (tf.n > limits().oracle_n_cap)
    throw OracleCapExceeded("coeff_closed_form: n above oracle cap");
  if (tf.lambda.is_rational())
    return closed_form_rational(tf.n, k, tf.lambda.num(), tf.lambda.den());
  return closed_form_bigfloat(tf.n, k, tf.lambda.value());
}

Spectrum coeffs_closed_form(const TestFunction& tf, long trunc) {
  require_blaschke(tf, "coeffs_closed_form");
  if (trunc < 0 || trunc > limits().max_truncation)
    throw CapacityExceeded("coeffs_closed_form: bad truncation");
  Spectrum s;
  s.c.resize(static_cast<std::size_t>(trunc) + 1);
  for (long k = 0; k <= trunc; ++k)
    s.c[static_cast<std::size_t>(k)] = coeff_closed_form(tf, k);
  s.truncation = trunc;
  s.engine = Engine::ClosedForm;
  s.precision_bits = 113;  // certified to well below double rounding
  s.family = tf.family;
  s.lambda = tf.lambda.value();
  s.n = tf.n;
  s.tail_bound = tail_bound_best(tf, trunc);
  s.fp_l2_error = kEps * std::sqrt(static_cast<double>(trunc + 1));
  return s;
}

double tail_bound_of(const TestFunction& tf, long trunc, double rho,
                     int samples) {
  require_blaschke(tf, "tail_bound_of");
  const double l = tf.lambda.value();
  const double rho_max = l > 0.0 ? 1.0 / l : std::numeric_limits<double>::infinity();
  if (!(rho > 1.0 && rho < rho_max))
    throw InvalidRadius("tail_bound_of: need 1 < rho < 1/lambda");
  if (samples < 8) samples = 8;
  double log_max = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    double theta = (2.0 * M_PI * i) / samples;
    log_max = std::max(log_max, log_abs_f(tf, rho, theta));
  }
  // documented safety factor 2 on the sampled maximum
  double log_bound = std::log(2.0) + log_max - trunc * std::log(rho) -
                     std::log1p(-1.0 / rho);
  if (log_bound > 700.0) return std::numeric_limits<double>::infinity();
  return std::exp(log_bound);
}

double tail_bound_best(const TestFunction& tf, long trunc) {
  require_blaschke(tf, "tail_bound_best");
  const double l = tf.lambda.value();
  if (l == 0.0) return trunc >= tf.n ? 0.0 : 1.0;  // f = z^n
  const double hi = std::min(1.0 / l, 16.0);
  double best = std::numeric_limits<double>::infinity();
  const int grid = 48;
  for (int i = 1; i <= grid; ++i) {
    double rho = 1.0 + (hi - 1.0) * i / (grid + 1.0);
    best = std::min(best, tail_bound_of(tf, trunc, rho));
  }
  return best;
}

Spectrum coeffs_fft(const TestFunction& tf, long trunc, int oversample,
                    double alias_tol) {
  require_blaschke(tf, "coeffs_fft");
  if (trunc < 0) throw InvalidArgument("coeffs_fft: trunc must be >= 0");
  if (oversample < 2) oversample = 2;
  std::size_t m = 1;
  while (m < static_cast<std::size_t>(oversample) *
                 (static_cast<std::size_t>(trunc) + 1))
    m <<= 1;
  if (m > (std::size_t{1} << 23))
    throw CapacityExceeded("coeffs_fft: FFT length above configured cap");

  const double l = tf.lambda.value();
  std::vector<std::complex<double>> buf(m);
  for (std::size_t i = 0; i < m; ++i) {
    double theta = (2.0 * M_PI * i) / static_cast<double>(m);
    std::complex<double> z = std::polar(1.0, theta);
    std::complex<double> den = 1.0 - l * z;
    std::complex<double> b = (z - l) / den;
    // |b| = 1: binary powering keeps the modulus drift at ~log2(n) ulps
    std::complex<double> w(1.0, 0.0);
    std::complex<double> base = b;
    long e = tf.n;
    while (e > 0) {
      if (e & 1) w *= base;
      base *= base;
      e >>= 1;
    }
    buf[i] = w / den;
  }
  {
    static std::mutex plan_mutex;  // FFTW planning is not thread-safe
    std::lock_guard<std::mutex> lock(plan_mutex);
    fftw_plan plan = fftw_plan_dft_1d(
        static_cast<int>(m), reinterpret_cast<fftw_complex*>(buf.data()),
        reinterpret_cast<fftw_complex*>(buf.data()), FFTW_FORWARD,
        FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }

  // aliasing: index k picks up sum_{j>=1} c(k + j m); all such indices are
  // >= m - trunc, so the l^1 mass beyond m - trunc bounds it per coefficient
  double alias = l == 0.0 ? (static_cast<long>(m) - trunc > tf.n ? 0.0 : 1.0)
                          : tail_bound_best(tf, static_cast<long>(m) - trunc);
  if (!(alias <= alias_tol))
    throw AliasingUncertified("coeffs_fft: alias bound above tolerance");

  Spectrum s;
  s.c.resize(static_cast<std::size_t>(trunc) + 1);
  const double sup_f = 1.0 / (1.0 - l);
  const double im_tol = std::max(1e-12, alias);
  for (long k = 0; k <= trunc; ++k) {
    std::complex<double> v = buf[static_cast<std::size_t>(k)] /
                             static_cast<double>(m);
    if (!(std::fabs(v.imag()) < im_tol))
      throw CertificationFailure(
          "coeffs_fft: imaginary part above 1e-12 (coefficients must be real)");
    s.c[static_cast<std::size_t>(k)] = v.real();
  }
  s.truncation = trunc;
  s.engine = Engine::FFT;
  s.precision_bits = 53;
  s.family = tf.family;
  s.lambda = l;
  s.n = tf.n;
  s.tail_bound = tail_bound_best(tf, trunc);
  s.alias_bound = alias;
  s.fp_l2_error = (8.0 * std::log2(static_cast<double>(m)) * kEps * sup_f +
                   alias) *
                  std::sqrt(static_cast<double>(trunc) + 1.0);
  return s;
}

Spectrum dirichlet_coeffs(long n) {
  if (n < 1) throw InvalidArgument("dirichlet_coeffs: n must be >= 1");
  if (n - 1 > limits().max_truncation)
    throw CapacityExceeded("dirichlet_coeffs: order above configured cap");
  Spectrum s;
  s.c.assign(static_cast<std::size_t>(n), 1.0);
  s.truncation = n - 1;
  s.tail_bound = 0.0;
  s.engine = Engine::ClosedForm;
  s.precision_bits = 53;
  s.family = Family::Dirichlet;
  s.lambda = 0.0;
  s.n = n;
  s.fp_l2_error = 0.0;
  return s;
}

Spectrum auto_spectrum(const TestFunction& tf, double l1_rel_tol,
                       Engine engine) {
  if (tf.family == Family::Dirichlet) return dirichlet_coeffs(tf.n);
  require_blaschke(tf, "auto_spectrum");

  // cheap pre-sizing: l^1 >= l^2 = 1/sqrt(1-lambda^2), so a tail below
  // tol * l2_exact is already below tol * (partial l^1)
  const double l = tf.lambda.value();
  const double l2_exact = 1.0 / std::sqrt(1.0 - l * l);
  long trunc = std::max<long>(4 * tf.n, 64);
  while (tail_bound_best(tf, trunc) > l1_rel_tol * l2_exact) {
    if (trunc > limits().max_truncation)
      throw CapacityExceeded("auto_spectrum: certified truncation above cap");
    trunc *= 2;
  }
  for (;;) {
    Spectrum s;
    switch (engine) {
      case Engine::Recurrence:
        s = coeffs_recurrence(tf, trunc);
        break;
      case Engine::ClosedForm:
        s = coeffs_closed_form(tf, trunc);
        break;
      case Engine::FFT:
        s = coeffs_fft(tf, trunc);
        break;
    }
    if (s.tail_bound <= l1_rel_tol * s.l1_partial()) return s;
    trunc *= 2;
    if (trunc > limits().max_truncation)
      throw CapacityExceeded("auto_spectrum: certified truncation above cap");
  }
}

}  // namespace wl::coeffs
