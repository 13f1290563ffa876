#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zrq {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  UnsupportedDegree,
  ReducibleMinPoly,
  BadIsolatingInterval,
  RangeError,
  BasisError,
  NotContained,
  Isolated,
  WitnessNotFound,
  TypeMismatch,
  TrivialPreorder,
  ZeroPolynomial,
  SingularMatrix,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every domain failure in the library is reported as an Error carrying a
/// kind; the CLI maps kinds onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace zrq
