#pragma once

namespace wl {

/// Gamma function for real x > 0 via the Lanczos approximation
/// (g = 7, 9 coefficients; ~1e-15 relative accuracy on (0, 20]).
double lanczos_gamma(double x);

/// Gamma(3/4), the constant of the window equation.  Evaluated once by the
/// Lanczos series; certified against an independent high-precision value in
/// the test suite (1.22541670246517764512909830336...).
double gamma_three_quarters();

}  // namespace wl
