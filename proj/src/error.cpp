#include "tricode/error.hpp"

namespace tricode {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoNonzeroCodeword: return "NoNonzeroCodeword";
    case ErrorKind::BoundViolation: return "BoundViolation";
    case ErrorKind::LengthError: return "LengthError";
    case ErrorKind::AlphabetError: return "AlphabetError";
    case ErrorKind::InfeasibleShareCount: return "InfeasibleShareCount";
    case ErrorKind::NonBinaryResult: return "NonBinaryResult";
  }
  return "Unknown";
}

}  // namespace tricode
