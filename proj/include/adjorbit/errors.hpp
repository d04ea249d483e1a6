#pragma once

#include <stdexcept>
#include <string>

namespace adjorbit {

enum class ErrorKind {
  Parse,
  NotInAlgebra,
  DimensionMismatch,
  NotSquare,
  ZeroPolynomial,
  NotNilpotent,
  NoTripleFound,
  NonIntegerSpectrum,
  WitnessNotFound,
  NotSemisimple,
  ZeroElement,
  ZeroSemisimplePart,
  ZeroClass,
  UnsupportedAlgebra,
  NotBracketClosed,
  LinearlyDependent,
  Internal,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace adjorbit
