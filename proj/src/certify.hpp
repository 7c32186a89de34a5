// Invariant suites behind the `certify` command: cross-engine agreement,
// Parseval / inner-isometry, and the phase-derivative identities.
#pragma once

#include <string>
#include <vector>

#include "coeffs.hpp"

namespace wl::certify {

struct SuiteResult {
  std::string name;
  bool passed = false;
  long checks = 0;
  double worst = 0.0;  // worst observed residual (suite-specific scale)
  std::string detail;
};

/// Recurrence, closed-form and FFT engines agree within
/// max(1e-10, 1e-10 |value|).  Full grid: n in 1..60, lambda in
/// {0.3, 0.5, 0.75, 0.9}, k in 0..4n; small grid: a seeded random subsample.
SuiteResult cross_engine(bool full_grid, unsigned seed);

/// |sum c(k)^2 - 1/(1-lambda^2)| <= 2 * (certified l^2 mass uncertainty)
/// for every tested (n, lambda).
SuiteResult parseval(bool full_grid, unsigned seed);

/// Certified bound on |computed l^2 mass - true l^2 mass|: truncation tail
/// plus the engine's floating-point error model.
double l2_mass_uncertainty(const coeffs::Spectrum& s);

/// Finite-difference checks of phi', psi', F' = -phi, F'' = 1/(t r) at
/// seeded random (lambda, t); stationary residual |h'(phi(t))| < 1e-10;
/// identity -h''(phi(t)) = t r(t) at 1e-10 relative.
SuiteResult derivatives(int points, unsigned seed);

std::vector<SuiteResult> run_all(bool small_grid, unsigned seed);

}  // namespace wl::certify
