// Wiener (l^1_A) and Hardy (l^2_A) norms, the embedding ratio l1/l2, and the
// sharpness constant ratio / sqrt(n/(1-lambda)).  Norms are reported as
// certified intervals: truncation tails and the engines' floating-point
// error model both enter the interval width.
#pragma once

#include <optional>
#include <vector>

#include "coeffs.hpp"
#include "equidist.hpp"

namespace wl::norms {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

/// [partial, partial + tail] widened by the engine's fp error bound.
Interval l1_norm(const coeffs::Spectrum& s);

Interval l2_norm(const coeffs::Spectrum& s);

/// Exact inner-isometry value 1/sqrt(1-lambda^2) for the Blaschke-power family.
double l2_exact(const phase::LambdaParam& p);

struct NormReport {
  double lambda = 0.0;
  long n = 0;
  Interval l1, l2, ratio, sharpness;
  /// sum over I_n of |c(k)| when the window solver applies; NaN otherwise
  double partial_l1_window = std::numeric_limits<double>::quiet_NaN();
};

NormReport nikolskii_ratio(const coeffs::TestFunction& tf,
                           double l1_rel_tol = 1e-9);

struct SweepRecord {
  double lambda = 0.0;
  long n = 0;
  Interval l1;
  double l2 = 0.0;
  Interval ratio;
  Interval constant;
  double partial_l1_window = std::numeric_limits<double>::quiet_NaN();
};

/// Deterministic (lambda, n)-ordered sweep.  lambda >= 0.999 is rejected:
/// the certified truncation explodes like 1/(1-lambda).
std::vector<SweepRecord> sharpness_sweep(
    const std::vector<phase::LambdaParam>& lambdas, const std::vector<long>& ns,
    coeffs::Family family, double l1_rel_tol = 1e-9);

}  // namespace wl::norms
