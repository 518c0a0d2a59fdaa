#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bftorus {

enum class ErrorKind {
  NonIntegralResult,
  SingularMatrix,
  NotSquare,
  DimensionMismatch,
  NotMonic,
  DivisionByZero,
  FactorizationIncomplete,
  ZeroInverse,
  FieldMismatch,
  DependentBasis,
  NotFullRank,
  NotAnIdeal,
  NotAnOrder,
  NotASublattice,
  ReduciblePolynomial,
  CharPolyMismatch,
  DegeneratePeriod,
  InvalidArgument,
  ParseError,
  IoError,
  CrossCheckFailed,  // a debug-mode consistency assertion did not hold
};

std::string_view error_name(ErrorKind kind);

// Every library failure is reported through this one exception type; the
// kind is what the CLI prints and what callers should branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

// True when BFTORUS_DEBUG_ASSERT=1 is set in the environment.
// True when BFTORUS_DEBUG_ASSERT=1 or after set_debug_asserts(true).
bool debug_asserts_enabled();
void set_debug_asserts(bool on);

}  // namespace bftorus
