#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ghrv {

enum class ErrorCode {
  Syntax,
  UnknownVariable,
  NotSquare,
  BoundExceeded,
  Precondition,
  BadArity,
  NotInMaximalIdeal,
  NotRegularSequence,
  VariableLeak,
  NotStabilized,
  CertificationFailed,
  NotAComplex,
  NotHomogeneous,
  NotHomogeneousScalar,
  RingMismatch,
  InvalidComplex,
  UnsupportedField,
  NotContractible,
  TooLarge,
  Io,
  Format,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Error(ErrorCode code, const std::string& what, std::size_t position)
      : std::runtime_error(what), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  // Character offset into the parsed text, for syntax errors.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace ghrv
