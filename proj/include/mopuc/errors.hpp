#pragma once

#include <stdexcept>
#include <string>

namespace mopuc {

// Root of the library's failure hierarchy.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller broke a contract: bad dimensions, malformed config, out-of-range
// arguments. These are detectable before any floating-point work starts.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DegreeExceedsFormal : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class EmptyGrid : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InsufficientMoments : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// The computation itself failed: the data violates a mathematical
// precondition or the numerics could not reach the promised accuracy.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotPsd : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularMatrix : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class QuadratureUnderResolved : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateMeasure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IncompatiblePair : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ReflectionTooLarge : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace mopuc
