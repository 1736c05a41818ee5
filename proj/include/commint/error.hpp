#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace commint {

enum class ErrorKind {
  AxiomViolation,
  IndexOutOfRange,
  AbelianGroup,
  ParameterOutOfRange,
  NotPrime,
  NotSymmetric,
  NonzeroDiagonal,
  NotBinary,
  NotMonic,
  EmptyInput,
  IncompleteSpectrum,
  UnsupportedFamily,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI,
/// the Python bindings) can map it to an exit code or exception class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace commint
