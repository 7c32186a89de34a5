#include "equidist.hpp"

#include <algorithm>
#include <cmath>

#include "gammafn.hpp"
#include "kahan.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"

namespace wl::equidist {

namespace {

constexpr double kPi = fpx::pi_v<double>;

double quarter_weight(double alpha, double t) {
  double rsq = (t - alpha) * (1.0 / alpha - t);
  return 1.0 / std::sqrt(std::sqrt(rsq));
}

void check_solvable(const phase::LambdaParam& p) {
  if (p.value() <= 0.0)
    throw DegenerateLambda("window machinery requires lambda > 0");
}

}  // namespace

double window_integral(const phase::LambdaParam& p, double beta) {
  check_solvable(p);
  const double alpha = p.alpha();
  if (!(beta > alpha && beta < 1.0))
    throw InvalidArgument("window_integral: beta must lie in (alpha, 1)");
  auto f = [alpha](double t) { return quarter_weight(alpha, t); };
  auto res = quad::integrate(f, beta, 1.0 / beta, 1e-13, 1e-14);
  return res.value;
}

double full_window_integral(const phase::LambdaParam& p) {
  check_solvable(p);
  const double a = p.alpha();
  const double b = 1.0 / a;
  const double mid = 0.5 * (a + b);
  const double span = b - a;
  // left half, t = a + u^4:
  //   dt/[(t-a)(b-t)]^{1/4} = 4 u^2 (b - a - u^4)^{-1/4} du
  auto left = [&](double u) {
    double u4 = u * u * u * u;
    return 4.0 * u * u / std::sqrt(std::sqrt(span - u4));
  };
  // right half, t = b - u^4, by symmetry of the substitution
  auto right = left;
  const double ul = std::pow(mid - a, 0.25);
  const double ur = std::pow(b - mid, 0.25);
  auto rl = quad::integrate(left, 0.0, ul, 1e-13, 1e-14);
  auto rr = quad::integrate(right, 0.0, ur, 1e-13, 1e-14);
  return rl.value + rr.value;
}

double full_window_closed_form(const phase::LambdaParam& p) {
  check_solvable(p);
  const double l = p.value();
  const double g = 2.0 * gamma_three_quarters();
  return g * g * std::sqrt(l / (kPi * (1.0 - l * l)));
}

WindowConfig beta_solve(const phase::LambdaParam& p, double tol) {
  check_solvable(p);
  const double l = p.value();
  const double alpha = p.alpha();
  const double g34 = gamma_three_quarters();
  const double target = g34 * g34 / std::sqrt(1.0 - l);

  double lo = alpha + (1.0 - alpha) * 1e-9;  // integral ~ full value
  double hi = 1.0 - 1e-12;                   // integral ~ 0
  if (window_integral(p, lo) < target)
    throw NoRoot(
        "beta_solve: full-window integral below target (lambda too small)");

  // the integral is continuous and strictly decreasing in beta
  for (int it = 0; it < 200; ++it) {
    double midb = 0.5 * (lo + hi);
    if (!(midb > lo && midb < hi)) break;
    double v = window_integral(p, midb);
    if (std::fabs(v - target) <= 0.5 * tol) {
      lo = hi = midb;
      break;
    }
    (v > target ? lo : hi) = midb;
  }
  WindowConfig w;
  w.lambda = l;
  w.alpha = alpha;
  w.beta = 0.5 * (lo + hi);
  w.target = target;
  w.residual = std::fabs(window_integral(p, w.beta) - target);
  if (!(w.residual <= tol))
    throw NoRoot("beta_solve: bisection failed to reach 1e-10 residual");
  return w;
}

IndexWindow index_window(const WindowConfig& w, long n) {
  if (n < 1) throw InvalidArgument("index_window: n must be >= 1");
  long double bn = static_cast<long double>(w.beta) * n;
  long double bninv = static_cast<long double>(n) / w.beta;
  IndexWindow iw;
  iw.lo = static_cast<long>(std::ceil(bn));
  iw.hi = static_cast<long>(std::floor(bninv));
  if (iw.empty()) throw EmptyWindow("index_window: I_n contains no integer");
  return iw;
}

double s_frac(const phase::LambdaParam& p, const WindowConfig& w, long n,
              long k, phase::Precision prec) {
  IndexWindow iw = index_window(w, n);
  if (k < iw.lo || k > iw.hi)
    throw OutOfWindow("s_frac: k outside I_n");
  return phase::phase_frac_cycles(p, n, k, prec);
}

WindowSamples window_samples(const phase::LambdaParam& p, const WindowConfig& w,
                             long n, phase::Precision prec) {
  WindowSamples ws;
  ws.window = index_window(w, n);
  const std::size_t count = static_cast<std::size_t>(ws.window.size());
  ws.s.resize(count);
  ws.weight.resize(count);
  const double alpha = w.alpha;
  const long lo = ws.window.lo;
  parallel_for_index(count, [&](std::size_t i) {
    long k = lo + static_cast<long>(i);
    double t = static_cast<double>(k) / static_cast<double>(n);
    ws.s[i] = phase::phase_frac_cycles(p, n, k, prec);
    ws.weight[i] = quarter_weight(alpha, t);
  });
  return ws;
}

namespace {

struct MxPartial {
  double m = 0.0, x = 0.0;
};

SumStats big_mx_from(const WindowSamples& ws) {
  const std::size_t count = ws.s.size();
  auto partial = chunked_reduce<MxPartial>(
      count, 8192, MxPartial{},
      [&](std::size_t b, std::size_t e) {
        KahanSum m, x;
        for (std::size_t i = b; i < e; ++i) {
          m += ws.weight[i];
          x += ws.weight[i] * std::fabs(std::cos(2.0 * kPi * ws.s[i]));
        }
        return MxPartial{m.value(), x.value()};
      },
      [](MxPartial a, MxPartial b) {
        return MxPartial{a.m + b.m, a.x + b.x};
      });
  return SumStats{partial.m, partial.x};
}

double weighted_exp_from(const WindowSamples& ws, int j) {
  const std::size_t count = ws.s.size();
  struct P {
    double re = 0.0, im = 0.0;
  };
  auto partial = chunked_reduce<P>(
      count, 8192, P{},
      [&](std::size_t b, std::size_t e) {
        KahanSum re, im;
        for (std::size_t i = b; i < e; ++i) {
          double ph = 2.0 * kPi * j * ws.s[i];
          double wgt = ws.weight[i];
          re += wgt * std::cos(ph);
          im += wgt * std::sin(ph);
        }
        return P{re.value(), im.value()};
      },
      [](P a, P b) { return P{a.re + b.re, a.im + b.im}; });
  return std::hypot(partial.re, partial.im);
}

double max_weyl_from(const WindowSamples& ws, int j) {
  double re = 0.0, im = 0.0, best = 0.0;
  for (double sv : ws.s) {
    double ph = 2.0 * kPi * j * sv;
    re += std::cos(ph);
    im += std::sin(ph);
    best = std::max(best, std::hypot(re, im));
  }
  return best;
}

}  // namespace

SumStats big_mx(const phase::LambdaParam& p, const WindowConfig& w, long n,
                phase::Precision prec) {
  return big_mx_from(window_samples(p, w, n, prec));
}

std::complex<double> weyl_sum(const phase::LambdaParam& p,
                              const WindowConfig& w, long n, int j, long m,
                              phase::Precision prec) {
  if (j == 0) throw ZeroFrequency("weyl_sum: j must be nonzero");
  WindowSamples ws = window_samples(p, w, n, prec);
  if (m < ws.window.lo || m > ws.window.hi)
    throw OutOfWindow("weyl_sum: m outside I_n");
  std::complex<double> acc{0.0, 0.0};
  for (long k = ws.window.lo; k <= m; ++k) {
    double ph = 2.0 * kPi * j * ws.s[static_cast<std::size_t>(k - ws.window.lo)];
    acc += std::complex<double>(std::cos(ph), std::sin(ph));
  }
  return acc;
}

double weighted_exp_sum(const phase::LambdaParam& p, const WindowConfig& w,
                        long n, int j, phase::Precision prec) {
  if (j == 0) throw ZeroFrequency("weighted_exp_sum: j must be nonzero");
  return weighted_exp_from(window_samples(p, w, n, prec), j);
}

EquidistReport report(const phase::LambdaParam& p, const WindowConfig& w,
                      long n, int j_max, phase::Precision prec) {
  if (j_max < 1) throw InvalidArgument("report: j_max must be >= 1");
  WindowSamples ws = window_samples(p, w, n, prec);
  EquidistReport rep;
  rep.n = n;
  rep.window = ws.window;
  SumStats mx = big_mx_from(ws);
  rep.big_m = mx.big_m;
  rep.big_x = mx.big_x;
  rep.ratio_xm = mx.big_x / mx.big_m;
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  for (int j = 1; j <= j_max; ++j) {
    rep.weyl_over_sqrt_n.emplace_back(j, max_weyl_from(ws, j) / sqrt_n);
    rep.y_over_m.emplace_back(j, weighted_exp_from(ws, j) / rep.big_m);
  }
  return rep;
}

VdcReport vdc_bound_check(const phase::LambdaParam& p, const WindowConfig& w,
                          long n, int j, phase::Precision prec) {
  if (j == 0) throw ZeroFrequency("vdc_bound_check: j must be nonzero");
  const double nn = static_cast<double>(n);

  // theta(x) = j (n F(t) - psi(t) - pi/4)/(2 pi) at t = x/n:
  //   theta'(x)  = j (F'(t) - psi'(t)/n) / (2 pi)
  //   theta''(x) = j (F''(t) - psi''(t)/n) / (2 pi n)
  auto derivs = [&](double t) {
    phase::PhasePoint pp = phase::phase_point(p, t);
    double rp = (1.0 / pp.r) * ((1.0 + w.lambda * w.lambda) /
                                    (1.0 - w.lambda * w.lambda) -
                                t);
    double psi2 = (pp.r + t * rp - t * t * rp) / (2.0 * t * t * pp.r * pp.r);
    double th1 = j * (pp.big_f_prime - pp.psi_prime / nn) / (2.0 * kPi);
    double th2 = j * (pp.big_f_second - psi2 / nn) / (2.0 * kPi * nn);
    return std::pair<double, double>(th1, th2);
  };

  VdcReport rep;
  const int grid = 4096;
  double mu = std::numeric_limits<double>::infinity();
  double th_max = 0.0;
  const double b0 = w.beta, b1 = 1.0 / w.beta;
  for (int i = 0; i <= grid; ++i) {
    double t = b0 + (b1 - b0) * i / grid;
    auto [th1, th2] = derivs(t);
    mu = std::min(mu, std::fabs(th2));
    th_max = std::max(th_max, std::fabs(th1));
  }
  rep.mu = mu;
  rep.theta_prime_span = std::fabs(derivs(b1).first - derivs(b0).first);
  rep.theta_prime_max = th_max;

  WindowSamples ws = window_samples(p, w, n, prec);
  rep.max_abs_sum = max_weyl_from(ws, j);
  rep.fitted_c = std::max(
      0.0, (rep.max_abs_sum / (rep.theta_prime_span + 2.0)) - 4.0 / std::sqrt(mu));
  return rep;
}

}  // namespace wl::equidist
