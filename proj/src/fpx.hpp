// Floating-point shims so the phase kernels can be instantiated at double,
// 80-bit extended, or IEEE binary128 precision.  The quad-precision overloads
// forward to libquadmath.
#pragma once

#include <cmath>
#include <quadmath.h>

namespace wl::fpx {

template <class T>
inline constexpr T pi_v = T(3.141592653589793238462643383279502884L);

template <>
inline constexpr __float128 pi_v<__float128> = M_PIq;

inline double fp_sqrt(double x) { return std::sqrt(x); }
inline long double fp_sqrt(long double x) { return std::sqrt(x); }
inline __float128 fp_sqrt(__float128 x) { return sqrtq(x); }

inline double fp_acos(double x) { return std::acos(x); }
inline long double fp_acos(long double x) { return std::acos(x); }
inline __float128 fp_acos(__float128 x) { return acosq(x); }

inline double fp_atan(double x) { return std::atan(x); }
inline long double fp_atan(long double x) { return std::atan(x); }
inline __float128 fp_atan(__float128 x) { return atanq(x); }

inline double fp_atan2(double y, double x) { return std::atan2(y, x); }
inline long double fp_atan2(long double y, long double x) { return std::atan2(y, x); }
inline __float128 fp_atan2(__float128 y, __float128 x) { return atan2q(y, x); }

inline double fp_sin(double x) { return std::sin(x); }
inline long double fp_sin(long double x) { return std::sin(x); }
inline __float128 fp_sin(__float128 x) { return sinq(x); }

inline double fp_cos(double x) { return std::cos(x); }
inline long double fp_cos(long double x) { return std::cos(x); }
inline __float128 fp_cos(__float128 x) { return cosq(x); }

inline double fp_floor(double x) { return std::floor(x); }
inline long double fp_floor(long double x) { return std::floor(x); }
inline __float128 fp_floor(__float128 x) { return floorq(x); }

inline double fp_abs(double x) { return std::fabs(x); }
inline long double fp_abs(long double x) { return std::fabs(x); }
inline __float128 fp_abs(__float128 x) { return fabsq(x); }

/// Fractional part in [0, 1).
template <class T>
inline T fp_frac(T x) {
  T f = x - fp_floor(x);
  if (f >= T(1)) f -= T(1);  // guard against rounding at the boundary
  if (f < T(0)) f += T(1);
  return f;
}

}  // namespace wl::fpx
