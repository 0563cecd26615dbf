#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chaingeo {

enum class ErrorKind {
  Construction,
  Size,
  NoAlgebraStructure,
  NotOnQuadric,
  Domain,
  NumericalRankAmbiguity,
  RingMismatch,
  NotInvertible,
  NotAdmissible,
  NotDistant,
  Internal,
  WellDefinednessViolation,
  NotLocal,
  NotASystem,
  WrongRingKind,
  DimensionMismatch,
  Parse,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Construction: return "ConstructionError";
    case ErrorKind::Size: return "SizeError";
    case ErrorKind::NoAlgebraStructure: return "NoAlgebraStructure";
    case ErrorKind::NotOnQuadric: return "NotOnQuadric";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::NumericalRankAmbiguity: return "NumericalRankAmbiguity";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotDistant: return "NotDistant";
    case ErrorKind::Internal: return "InternalError";
    case ErrorKind::WellDefinednessViolation: return "WellDefinednessViolation";
    case ErrorKind::NotLocal: return "NotLocal";
    case ErrorKind::NotASystem: return "NotASystem";
    case ErrorKind::WrongRingKind: return "WrongRingKind";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

/// Single exception type for the library; `kind()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace chaingeo
