#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace angcalc {

enum class ErrorKind {
  ConstraintViolation,
  ZeroHom,
  ShapeMismatch,
  SupportViolation,
  NotAnAngle,
  BadDistance,
  NotWide,
  NotMember,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every recoverable failure of the library surfaces as a DomainError whose
/// kind is stable and machine-readable (the CLI prints it verbatim).
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace angcalc
