// Adaptive Gauss-Kronrod (G7,K15) quadrature, plus an oscillation-aware
// panel integrator for integrals of the form int g(s) e^{i n h(s)} ds.
#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace wl::quad {

struct Result {
  double value = 0.0;
  double abs_err = 0.0;
  std::size_t evals = 0;
  bool converged = false;
};

struct ComplexResult {
  std::complex<double> value{0.0, 0.0};
  double abs_err = 0.0;
  std::size_t evals = 0;
  bool converged = false;
};

/// Globally adaptive G7K15 on [a,b]; stops when the summed panel error
/// estimate is below max(abs_tol, rel_tol * |integral|).
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, double abs_tol = 1e-14,
                 std::size_t max_evals = 2'000'000);

ComplexResult integrate_complex(const std::function<std::complex<double>(double)>& f,
                                double a, double b, double rel_tol = 1e-12,
                                double abs_tol = 1e-14,
                                std::size_t max_evals = 2'000'000);

/// Oscillatory integral int_a^b g(s) e^{i n h(s)} ds.  Initial panels are
/// sized from |h'| so that each 15-node panel spans at most 1.5 oscillation
/// periods (>= 10 nodes per period); each panel is then refined adaptively.
/// `h_prime` must be monotone or at least give a usable local frequency.
struct OscParams {
  double abs_tol = 1e-10;
  double nodes_per_period = 10.0;
  std::size_t max_evals = 20'000'000;
};

ComplexResult oscillatory(const std::function<std::complex<double>(double)>& g,
                          const std::function<double(double)>& h,
                          const std::function<double(double)>& h_prime,
                          double n, double a, double b,
                          const OscParams& params = {});

}  // namespace wl::quad
