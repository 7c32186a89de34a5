#include "gammafn.hpp"

#include <cmath>

#include "errors.hpp"

namespace wl {

double lanczos_gamma(double x) {
  if (!(x > 0.0)) throw InvalidArgument("lanczos_gamma requires x > 0");
  // Lanczos, g = 7.
  static const double c[9] = {0.99999999999980993,
                              676.5203681218851,
                              -1259.1392167224028,
                              771.32342877765313,
                              -176.61502916214059,
                              12.507343278686905,
                              -0.13857109526572012,
                              9.9843695780195716e-6,
                              1.5056327351493116e-7};
  double a = c[0];
  for (int i = 1; i < 9; ++i) a += c[i] / (x - 1.0 + i);
  double w = x + 6.5;  // x + g - 0.5
  return std::sqrt(2.0 * M_PI) * std::pow(w, x - 0.5) * std::exp(-w) * a;
}

double gamma_three_quarters() {
  static const double value = lanczos_gamma(0.75);
  return value;
}

}  // namespace wl
