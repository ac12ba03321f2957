#pragma once

#include <stdexcept>
#include <string>

namespace tropt {

// Base class for all contract violations raised by this library.  Every
// error carries a stable kind string (the condition that was violated) and a
// human-readable detail message; what() combines both.
class TropError : public std::runtime_error {
 public:
  TropError(const char* kind, const std::string& detail)
      : std::runtime_error(std::string(kind) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  const char* kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  const char* kind_;
  std::string detail_;
};

#define TROPT_DEFINE_ERROR(NAME)                      \
  struct NAME : TropError {                           \
    explicit NAME(const std::string& detail)          \
        : TropError(#NAME, detail) {}                 \
  };

// Scalar arithmetic.
TROPT_DEFINE_ERROR(InversionOfZero)
TROPT_DEFINE_ERROR(RootOfZero)

// Vectors and matrices.
TROPT_DEFINE_ERROR(DimensionMismatch)
TROPT_DEFINE_ERROR(ZeroVector)
TROPT_DEFINE_ERROR(NotSquare)
TROPT_DEFINE_ERROR(StarDiverges)

// Equation and inequality solvers.
TROPT_DEFINE_ERROR(IrregularCoefficient)
TROPT_DEFINE_ERROR(ZeroRightHandSide)
TROPT_DEFINE_ERROR(NotColumnRegular)
TROPT_DEFINE_ERROR(IrregularBound)

// Optimization.
TROPT_DEFINE_ERROR(ZeroSpectralRadius)
TROPT_DEFINE_ERROR(InfeasibleBounds)
TROPT_DEFINE_ERROR(ZeroP)
TROPT_DEFINE_ERROR(IrregularQ)
TROPT_DEFINE_ERROR(IrregularH)
TROPT_DEFINE_ERROR(EmptySolutionSet)
TROPT_DEFINE_ERROR(EnumerationLimitExceeded)

// Scheduling.
TROPT_DEFINE_ERROR(NotRowRegular)
TROPT_DEFINE_ERROR(NotRegular)
TROPT_DEFINE_ERROR(InfeasibleDueDates)
TROPT_DEFINE_ERROR(CyclicFinishStart)

// Verification oracle.
TROPT_DEFINE_ERROR(GridTooLarge)

// Project files and command line.
TROPT_DEFINE_ERROR(ParseError)
TROPT_DEFINE_ERROR(ValidationError)
TROPT_DEFINE_ERROR(UnsupportedConstraintCombination)

#undef TROPT_DEFINE_ERROR

}  // namespace tropt
