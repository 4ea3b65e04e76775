#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace corrdet {

enum class ErrorKind {
  NonConvergence,
  EmptyVector,
  OutOfRange,
  DimensionTooSmall,
  NotUnitDiagonal,
  OffDiagonalOutOfRange,
  NotPositiveSemidefinite,
  InvalidExponent,
  LengthMismatch,
  LengthTooSmall,
  InternalInconsistency,
  DegenerateRow,
  InvalidConfig,
  ParseError,
  NotSymmetric,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `value()` carries the offending
/// quantity where one exists (e.g. the minimum eigenvalue for
/// NotPositiveSemidefinite).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<double> value = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), value_(value) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<double> value() const noexcept { return value_; }

 private:
  ErrorKind kind_;
  std::optional<double> value_;
};

}  // namespace corrdet
