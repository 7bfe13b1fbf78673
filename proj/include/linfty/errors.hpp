#pragma once

#include <stdexcept>
#include <string>

namespace linfty {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownLabel : Error {
  using Error::Error;
};
struct DuplicateLabel : Error {
  using Error::Error;
};
struct RingMismatch : Error {
  using Error::Error;
};
struct DivisionError : Error {
  using Error::Error;
};
// Row reduction hit a pivot that is not invertible in the scalar ring
// (can only happen over the Laurent ring, which is not a field).
struct NonInvertiblePivot : Error {
  using Error::Error;
};
struct ArityMismatch : Error {
  using Error::Error;
};
struct NonHomogeneousArgument : Error {
  using Error::Error;
};
struct NotInImage : Error {
  using Error::Error;
};
struct ForcedZeroViolated : Error {
  using Error::Error;
};
struct DegreeRuleViolation : Error {
  using Error::Error;
};
struct NotAntisymmetric : Error {
  using Error::Error;
};
struct JacobiatorNotInImage : Error {
  using Error::Error;
};
struct ClosureViolated : Error {
  using Error::Error;
};
struct KernelAssertionFailed : Error {
  using Error::Error;
};
// A caller-supplied f/action override does not satisfy its defining equation.
struct InvalidOverride : Error {
  using Error::Error;
};
struct DivergentContraction : Error {
  using Error::Error;
};
// Document/CLI-level validation failure that has no more specific class.
struct ValidationError : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  int line = 0;
  int col = 0;
  SyntaxError(const std::string& msg, int line_, int col_)
      : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

}  // namespace linfty
