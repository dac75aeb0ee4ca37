#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tricode {

enum class ErrorKind {
  DivisionByZero,
  ParseError,
  ShapeError,
  SingularMatrix,
  TooLarge,
  NoNonzeroCodeword,
  BoundViolation,
  LengthError,
  AlphabetError,
  InfeasibleShareCount,
  NonBinaryResult,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Every domain failure in the library is reported through this type; the
// CLI maps it to exit code 1 and prints error_name(kind()).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace tricode
