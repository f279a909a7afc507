#include "opnorm/error.hpp"

namespace opnorm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kShape: return "ShapeError";
    case ErrorKind::kInvalidExponent: return "InvalidExponent";
    case ErrorKind::kNonFinite: return "NonFiniteEntry";
    case ErrorKind::kNoRoot: return "NoRoot";
    case ErrorKind::kNumerical: return "NumericalError";
    case ErrorKind::kDegenerateShear: return "DegenerateShear";
    case ErrorKind::kUnsupportedExponent: return "UnsupportedExponent";
    case ErrorKind::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::kPreconditionViolation: return "PreconditionViolation";
    case ErrorKind::kConstruction: return "ConstructionError";
    case ErrorKind::kNotInClass: return "NotInClass";
    case ErrorKind::kNotInvertible: return "NotInvertible";
    case ErrorKind::kSingularScaling: return "SingularScaling";
    case ErrorKind::kCertificateMismatch: return "CertificateMismatch";
    case ErrorKind::kInput: return "InputError";
  }
  return "UnknownError";
}

}  // namespace opnorm
