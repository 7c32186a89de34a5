#include "asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "quadrature.hpp"

namespace wl::asym {

namespace {

constexpr double kPi = fpx::pi_v<double>;

void require_theorem_lambda(const phase::LambdaParam& p) {
  if (!(p.value() >= 0.5 && p.value() < 1.0))
    throw InvalidArgument(
        "stationary-phase window requires lambda in [1/2, 1)");
}

double amplitude_at(const phase::LambdaParam& p, long n, double t) {
  const double l = p.value();
  const double alpha = p.alpha();
  const double rsq = (t - alpha) * (1.0 / alpha - t);
  return std::sqrt(2.0 / (n * (1.0 - l * l) * kPi)) /
         std::sqrt(std::sqrt(rsq));
}

AsymptoticRecord build_record(const phase::LambdaParam& p, long n, long k,
                              double exact, phase::Precision prec) {
  AsymptoticRecord rec;
  rec.n = n;
  rec.k = k;
  rec.t = static_cast<double>(k) / static_cast<double>(n);
  rec.amplitude = amplitude_at(p, n, rec.t);
  rec.phase_mod_2pi = phase::phase_mod_2pi(p, n, k, prec);
  rec.predicted = rec.amplitude * std::cos(rec.phase_mod_2pi);
  rec.exact = exact;
  rec.abs_err = std::fabs(rec.exact - rec.predicted);
  rec.scaled_err = static_cast<double>(n) * rec.abs_err;
  return rec;
}

}  // namespace

AsymptoticRecord theorem3_coeff(const phase::LambdaParam& p,
                                const equidist::WindowConfig& w, long n, long k,
                                const coeffs::Spectrum* exact_src,
                                phase::Precision prec) {
  require_theorem_lambda(p);
  if (n < 1) throw InvalidArgument("theorem3_coeff: n must be >= 1");
  equidist::IndexWindow iw = equidist::index_window(w, n);
  if (k < iw.lo || k > iw.hi)
    throw OutOfWindow("theorem3_coeff: k/n outside [beta, 1/beta]");

  double exact;
  if (exact_src != nullptr && k <= exact_src->truncation) {
    exact = exact_src->c[static_cast<std::size_t>(k)];
  } else {
    coeffs::TestFunction tf{coeffs::Family::BlaschkePower, p, n};
    if (n <= coeffs::limits().oracle_n_cap && p.is_rational()) {
      exact = coeffs::coeff_closed_form(tf, k);
    } else {
      exact = coeffs::coeffs_recurrence(tf, k).c[static_cast<std::size_t>(k)];
    }
  }
  return build_record(p, n, k, exact, prec);
}

AsymptoticRecord theorem3_coeff(const phase::LambdaParam& p, long n, long k,
                                phase::Precision prec) {
  equidist::WindowConfig w = equidist::beta_solve(p);
  return theorem3_coeff(p, w, n, k, nullptr, prec);
}

double oscillatory_oracle(const phase::LambdaParam& p, long n, long k,
                          const QuadConfig& quad) {
  if (p.value() == 0.0)
    throw DegenerateLambda("oscillatory_oracle: phase undefined at lambda 0");
  if (n < 1 || k < 0)
    throw InvalidArgument("oscillatory_oracle: requires n >= 1, k >= 0");
  const double l = p.value();
  // n h_t(s) = n arg(b(e^{is})) - k s works for any k >= 0, stationary or not
  const double t = static_cast<double>(k) / static_cast<double>(n);
  auto g = [l](double s) {
    return 1.0 / (1.0 - l * std::polar(1.0, s));
  };
  auto h = [&](double s) { return phase::h_eval(p, t, s); };
  auto hp = [&](double s) { return phase::h_prime(p, t, s); };
  quad::OscParams params;
  params.abs_tol = quad.abs_tol;
  params.nodes_per_period = quad.nodes_per_period;
  params.max_evals = quad.max_evals;
  auto res = quad::oscillatory(g, h, hp, static_cast<double>(n), 0.0, kPi,
                               params);
  if (!res.converged)
    throw ResolutionInsufficient(
        "oscillatory_oracle: quadrature could not certify the requested "
        "tolerance");
  return res.value.real() / kPi;
}

double choose_gamma(const phase::LambdaParam& p,
                    const equidist::WindowConfig& w) {
  // phi is strictly decreasing in t, so the extremes sit at the window edges
  double phi_hi = phase::phase_point(p, w.beta).phi;
  double phi_lo = phase::phase_point(p, 1.0 / w.beta).phi;
  double gamma = std::min(phi_lo, kPi - phi_hi);
  if (!(gamma > 0.0))
    throw CutoffInvalid("choose_gamma: window touches the phase boundary");
  return gamma;
}

namespace {

double glue(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double a = std::exp(-1.0 / x);
  double b = std::exp(-1.0 / (1.0 - x));
  return a / (a + b);
}

}  // namespace

double cutoff_nu(double s, double gamma) {
  if (!(gamma > 0.0 && gamma < kPi / 2.0))
    throw CutoffInvalid("cutoff_nu: need 0 < gamma < pi/2");
  const double q = gamma / 4.0;
  if (s <= q || s >= kPi - q) return 0.0;
  if (s < 2.0 * q) return glue((s - q) / q);
  if (s > kPi - 2.0 * q) return glue((kPi - q - s) / q);
  return 1.0;
}

FedoryukResult fedoryuk_leading(const phase::LambdaParam& p, long n, double t,
                                CutoffConfig cfg) {
  require_theorem_lambda(p);
  if (n < 1) throw InvalidArgument("fedoryuk_leading: n must be >= 1");
  equidist::WindowConfig w = equidist::beta_solve(p);
  if (!(t >= w.beta && t <= 1.0 / w.beta))
    throw OutOfWindow("fedoryuk_leading: t outside [beta, 1/beta]");
  const double gamma_max = choose_gamma(p, w);
  double gamma = cfg.gamma == 0.0 ? gamma_max : cfg.gamma;
  if (!(gamma > 0.0 && gamma <= gamma_max))
    throw CutoffInvalid(
        "fedoryuk_leading: cutoff plateau must contain all stationary angles");

  const double l = p.value();
  phase::PhasePoint pp = phase::phase_point(p, t);

  // leading term: e^{i(n h~(phi) + pi/4 + psi)} sqrt(2 pi/(n(1-l^2))) r^{-1/2},
  // h~(phi(t)) = -F(t); n F is reduced mod 2 pi in extended precision
  __float128 lq = l, aq = p.alpha(), tq = t;
  if (p.is_rational()) {
    lq = __float128(p.num()) / __float128(p.den());
    aq = (__float128(1) - lq) / (__float128(1) + lq);
  }
  auto geo = phase::detail::geometry<__float128>(lq, aq, tq);
  __float128 cycles = (__float128(n) * (-geo.big_f) + fpx::pi_v<__float128> / 4 +
                       geo.psi) /
                      (2 * fpx::pi_v<__float128>);
  double arg = static_cast<double>(fpx::fp_frac(cycles)) * 2.0 * kPi;
  double mag = std::sqrt(2.0 * kPi / (n * (1.0 - l * l))) / std::sqrt(pp.r);

  FedoryukResult out;
  out.gamma = gamma;
  out.leading = std::polar(mag, arg);

  auto g = [l, gamma](double s) {
    return cutoff_nu(s, gamma) / (1.0 - l * std::polar(1.0, -s));
  };
  auto h = [&](double s) { return -phase::h_eval(p, t, s); };
  auto hp = [&](double s) { return -phase::h_prime(p, t, s); };
  quad::OscParams params;
  params.abs_tol = std::min(1e-10, 1e-3 * mag / n);
  auto res = quad::oscillatory(g, h, hp, static_cast<double>(n), gamma / 4.0,
                               kPi - gamma / 4.0, params);
  if (!res.converged)
    throw ResolutionInsufficient("fedoryuk_leading: quadrature not certified");
  out.numeric = res.value;
  out.quad_err = res.abs_err;
  return out;
}

std::complex<double> endpoint_piece(const phase::LambdaParam& p, long n,
                                    double t, double gamma) {
  const double l = p.value();
  auto g = [l, gamma](double s) {
    return (1.0 - cutoff_nu(s, gamma)) / (1.0 - l * std::polar(1.0, -s));
  };
  auto h = [&](double s) { return -phase::h_eval(p, t, s); };
  auto hp = [&](double s) { return -phase::h_prime(p, t, s); };
  quad::OscParams params;
  params.abs_tol = 1e-12;
  auto res = quad::oscillatory(g, h, hp, static_cast<double>(n), 0.0,
                               gamma / 2.0, params);
  if (!res.converged)
    throw ResolutionInsufficient("endpoint_piece: quadrature not certified");
  return res.value;
}

std::vector<AsymptoticRecord> error_profile(const phase::LambdaParam& p,
                                            long n, phase::Precision prec) {
  require_theorem_lambda(p);
  equidist::WindowConfig w = equidist::beta_solve(p);
  equidist::IndexWindow iw = equidist::index_window(w, n);
  coeffs::TestFunction tf{coeffs::Family::BlaschkePower, p, n};
  coeffs::Spectrum spec = coeffs::coeffs_recurrence(tf, iw.hi);

  std::vector<AsymptoticRecord> records(static_cast<std::size_t>(iw.size()));
  parallel_for_index(records.size(), [&](std::size_t i) {
    long k = iw.lo + static_cast<long>(i);
    records[i] =
        build_record(p, n, k, spec.c[static_cast<std::size_t>(k)], prec);
  });
  return records;
}

}  // namespace wl::asym
