#pragma once

#include <stdexcept>
#include <string>

namespace superholonomy {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree in generator count or block sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An entry or coefficient vector violates the required Z2 grading.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// Element (or body block) has no inverse.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// The Sylvester operator built from the body blocks is singular, so the
/// odd block of a holonomy cannot be gauged away.
class SingularAhatError : public Error {
 public:
  using Error::Error;
};

/// The inputs do not satisfy the hypotheses an operation relies on.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace superholonomy
