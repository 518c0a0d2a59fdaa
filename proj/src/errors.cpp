#include "bftorus/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace bftorus {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FactorizationIncomplete: return "FactorizationIncomplete";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DependentBasis: return "DependentBasis";
    case ErrorKind::NotFullRank: return "NotFullRank";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotAnOrder: return "NotAnOrder";
    case ErrorKind::NotASublattice: return "NotASublattice";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::CharPolyMismatch: return "CharPolyMismatch";
    case ErrorKind::DegeneratePeriod: return "DegeneratePeriod";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::CrossCheckFailed: return "CrossCheckFailed";
  }
  return "UnknownError";
}

namespace {
std::atomic<int> g_debug_override{-1};
}

void set_debug_asserts(bool on) { g_debug_override = on ? 1 : 0; }

bool debug_asserts_enabled() {
  if (int o = g_debug_override.load(); o >= 0) return o == 1;
  const char* v = std::getenv("BFTORUS_DEBUG_ASSERT");
  return v != nullptr && std::strcmp(v, "1") == 0;
}

}  // namespace bftorus
