#pragma once

#include <stdexcept>
#include <string>

namespace hopfkit {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Shapes or ambient dimensions do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed structure tensors (wrong lengths, out-of-range indices).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Input data that is well-formed but fails an axiom check.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A computed object contradicts a theorem that must hold in finite dimension.
/// Seeing this means the implementation (or the input verification) is broken.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfkit
