#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opnorm {

enum class ErrorKind {
  kShape,
  kInvalidExponent,
  kNonFinite,
  kNoRoot,
  kNumerical,
  kDegenerateShear,
  kUnsupportedExponent,
  kUnsupportedDimension,
  kPreconditionViolation,
  kConstruction,
  kNotInClass,
  kNotInvertible,
  kSingularScaling,
  kCertificateMismatch,
  kInput,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace opnorm
