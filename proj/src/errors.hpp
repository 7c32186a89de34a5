#pragma once

#include <stdexcept>
#include <string>

#include "wienerlab.h"

namespace wl {

/// Base error carrying the C-API status code it maps to.
class Error : public std::runtime_error {
 public:
  Error(wl_status code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  wl_status code() const { return code_; }

 private:
  wl_status code_;
};

#define WL_DEFINE_ERROR(NAME, CODE)                                     \
  class NAME : public Error {                                           \
   public:                                                              \
    explicit NAME(const std::string& what) : Error(CODE, what) {}       \
  }

WL_DEFINE_ERROR(ConfigError, WL_E_CONFIG);
WL_DEFINE_ERROR(CertificationFailure, WL_E_CERTIFICATION);
WL_DEFINE_ERROR(CapacityExceeded, WL_E_CAPACITY);
WL_DEFINE_ERROR(DegenerateLambda, WL_E_DEGENERATE_LAMBDA);
WL_DEFINE_ERROR(NonpositiveT, WL_E_NONPOSITIVE_T);
WL_DEFINE_ERROR(OutOfRangeT, WL_E_OUT_OF_RANGE_T);
WL_DEFINE_ERROR(OutOfWindow, WL_E_OUT_OF_WINDOW);
WL_DEFINE_ERROR(InvalidRadius, WL_E_INVALID_RADIUS);
WL_DEFINE_ERROR(PrecisionExhausted, WL_E_PRECISION_EXHAUSTED);
WL_DEFINE_ERROR(OracleCapExceeded, WL_E_ORACLE_CAP);
WL_DEFINE_ERROR(AliasingUncertified, WL_E_ALIASING);
WL_DEFINE_ERROR(UncertifiedTail, WL_E_UNCERTIFIED_TAIL);
WL_DEFINE_ERROR(EmptyWindow, WL_E_EMPTY_WINDOW);
WL_DEFINE_ERROR(ZeroFrequency, WL_E_ZERO_FREQUENCY);
WL_DEFINE_ERROR(NoRoot, WL_E_NO_ROOT);
WL_DEFINE_ERROR(CutoffInvalid, WL_E_CUTOFF_INVALID);
WL_DEFINE_ERROR(ResolutionInsufficient, WL_E_RESOLUTION);
WL_DEFINE_ERROR(InvalidArgument, WL_E_INVALID_ARGUMENT);
WL_DEFINE_ERROR(IoError, WL_E_IO);

#undef WL_DEFINE_ERROR

}  // namespace wl
