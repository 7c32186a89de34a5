// Neumaier compensated accumulator.  The equidistribution sums run over up
// to ~10^6 terms of mixed magnitude; plain summation would lose the o(M)
// cancellation signal this artifact is trying to measure.
#pragma once

namespace wl {

class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    comp_ += magnitude_ge(sum_, x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

  KahanSum& operator+=(double x) {
    add(x);
    return *this;
  }

 private:
  static bool magnitude_ge(double a, double b) {
    return (a < 0 ? -a : a) >= (b < 0 ? -b : b);
  }
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace wl
