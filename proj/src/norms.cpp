#include "norms.hpp"

#include <algorithm>
#include <cmath>

#include "kahan.hpp"
#include "parallel.hpp"

namespace wl::norms {

namespace {

void require_certified(const coeffs::Spectrum& s) {
  if (!std::isfinite(s.tail_bound))
    throw UncertifiedTail("spectrum tail bound is missing or infinite");
}

/// l^1 bound on the stored-coefficient error vector (Cauchy-Schwarz from the
/// engine's certified l^2 error).
double fp_l1_error(const coeffs::Spectrum& s) {
  return s.fp_l2_error * std::sqrt(static_cast<double>(s.truncation) + 1.0);
}

}  // namespace

Interval l1_norm(const coeffs::Spectrum& s) {
  require_certified(s);
  const double partial = s.l1_partial();
  const double fp = fp_l1_error(s);
  return Interval{std::max(0.0, partial - fp), partial + s.tail_bound + fp};
}

Interval l2_norm(const coeffs::Spectrum& s) {
  require_certified(s);
  const double s2 = s.l2sq_partial();
  // truncated mass: sum_{k>N} c^2 <= (l^1 tail)^2
  const double tail2 = s.tail_bound * s.tail_bound;
  const double fp = 2.0 * std::sqrt(s2) * s.fp_l2_error +
                    s.fp_l2_error * s.fp_l2_error;
  return Interval{std::sqrt(std::max(0.0, s2 - fp)),
                  std::sqrt(s2 + tail2 + fp)};
}

double l2_exact(const phase::LambdaParam& p) {
  const double l = p.value();
  return 1.0 / std::sqrt(1.0 - l * l);
}

namespace {

Interval ratio_of(const Interval& a, const Interval& b) {
  return Interval{a.lo / b.hi, a.hi / b.lo};
}

NormReport report_for(const coeffs::TestFunction& tf,
                      const coeffs::Spectrum& s,
                      const equidist::WindowConfig* window) {
  NormReport rep;
  rep.lambda = tf.lambda.value();
  rep.n = tf.n;
  if (tf.family == coeffs::Family::Dirichlet) {
    // n ones: all norms exact
    double n = static_cast<double>(tf.n);
    rep.l1 = Interval{n, n};
    double l2 = std::sqrt(n);
    rep.l2 = Interval{l2, l2};
    rep.ratio = Interval{n / l2, n / l2};
  } else {
    rep.l1 = l1_norm(s);
    rep.l2 = l2_norm(s);
    rep.ratio = ratio_of(rep.l1, rep.l2);
  }
  const double scale =
      std::sqrt(static_cast<double>(tf.n) / (1.0 - rep.lambda));
  rep.sharpness = Interval{rep.ratio.lo / scale, rep.ratio.hi / scale};

  if (window != nullptr && tf.family == coeffs::Family::BlaschkePower) {
    try {
      equidist::IndexWindow iw = equidist::index_window(*window, tf.n);
      if (iw.hi <= s.truncation) {
        KahanSum part;
        for (long k = iw.lo; k <= iw.hi; ++k)
          part += std::fabs(s.c[static_cast<std::size_t>(k)]);
        rep.partial_l1_window = part.value();
      }
    } catch (const EmptyWindow&) {
      // leave NaN: window has no integer frequencies at this n
    }
  }
  return rep;
}

}  // namespace

NormReport nikolskii_ratio(const coeffs::TestFunction& tf, double l1_rel_tol) {
  if (tf.family == coeffs::Family::Dirichlet) {
    if (tf.n < 1) throw InvalidArgument("nikolskii_ratio: Dirichlet needs n >= 1");
    return report_for(tf, coeffs::Spectrum{}, nullptr);
  }
  coeffs::Spectrum s = coeffs::auto_spectrum(tf, l1_rel_tol);
  equidist::WindowConfig w;
  const equidist::WindowConfig* wp = nullptr;
  try {
    w = equidist::beta_solve(tf.lambda);
    wp = &w;
  } catch (const Error&) {
    // no window for this lambda; partial sum stays NaN
  }
  return report_for(tf, s, wp);
}

std::vector<SweepRecord> sharpness_sweep(
    const std::vector<phase::LambdaParam>& lambdas, const std::vector<long>& ns,
    coeffs::Family family, double l1_rel_tol) {
  if (lambdas.empty() || ns.empty())
    throw InvalidArgument("sharpness_sweep: empty grid");
  for (const auto& p : lambdas)
    if (p.value() >= 0.999)
      throw InvalidArgument(
          "sharpness_sweep: lambda >= 0.999 is out of scope (certified "
          "truncation explodes like 1/(1-lambda))");

  // deterministic ordering by (lambda, n) regardless of evaluation order
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (std::size_t j = 0; j < ns.size(); ++j) cells.emplace_back(i, j);
  std::sort(cells.begin(), cells.end(), [&](auto a, auto b) {
    if (lambdas[a.first].value() != lambdas[b.first].value())
      return lambdas[a.first].value() < lambdas[b.first].value();
    return ns[a.second] < ns[b.second];
  });

  std::vector<SweepRecord> rows(cells.size());
  parallel_for_index(cells.size(), [&](std::size_t idx) {
    const auto& [li, nj] = cells[idx];
    coeffs::TestFunction tf{family, lambdas[li], ns[nj]};
    NormReport rep = nikolskii_ratio(tf, l1_rel_tol);
    SweepRecord row;
    row.lambda = rep.lambda;
    row.n = rep.n;
    row.l1 = rep.l1;
    row.l2 = rep.l2.mid();
    row.ratio = rep.ratio;
    row.constant = rep.sharpness;
    row.partial_l1_window = rep.partial_l1_window;
    rows[idx] = row;
  });
  return rows;
}

}  // namespace wl::norms
