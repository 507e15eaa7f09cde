#pragma once

#include <stdexcept>
#include <string>

namespace zetapoly {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Weight outside the supported set (level one, dim S_k == 1).
class UnsupportedWeight : public PreconditionError {
  public:
    using PreconditionError::PreconditionError;
};

/// An exact division that was required to be exact left a remainder.
class DivisibilityError : public Error {
  public:
    using Error::Error;
};

/// Truncated series too short for the requested precision.
class PrecisionError : public Error {
  public:
    using Error::Error;
};

/// A postcondition that the mathematics guarantees did not hold. Indicates a
/// bug, not bad input.
class InternalCheckFailure : public Error {
  public:
    using Error::Error;
};

}  // namespace zetapoly
