#include "g2count/error.hpp"

namespace g2c {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::BoundNotMet: return "BoundNotMet";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::Ramified: return "Ramified";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::NonGeneric: return "NonGeneric";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::Exhausted: return "Exhausted";
    case ErrorKind::Inconsistent: return "InconsistentResidues";
    case ErrorKind::Internal: return "InternalInconsistency";
  }
  return "Unknown";
}

int error_exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Usage:
    case ErrorKind::Parse:
    case ErrorKind::Validation:
    case ErrorKind::BoundNotMet:
    case ErrorKind::EmptyRange:
    case ErrorKind::Ramified:
      return 2;
    case ErrorKind::DenominatorVanishes:
    case ErrorKind::GuardExceeded:
    case ErrorKind::NonGeneric:
    case ErrorKind::Exhausted:
      return 3;
    case ErrorKind::NotRational:
    case ErrorKind::Inconsistent:
    case ErrorKind::Internal:
      return 4;
  }
  return 4;
}

}  // namespace g2c
