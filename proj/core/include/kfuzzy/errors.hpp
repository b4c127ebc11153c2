#pragma once

#include <stdexcept>
#include <string>

namespace kfuzzy {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes or dimensions that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the supported numerical range, or a result that overflowed.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Input violating a documented precondition (symmetry, signature, unit norm, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Non-finite samples handed to a numerical kernel.
class InputError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a pole of a meromorphic function.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Integer Bessel order requested with limit handling disabled.
class DegenerateOrderError : public Error {
 public:
  using Error::Error;
};

// Classical mode with vanishing wave vector.
class DegenerateModeError : public Error {
 public:
  using Error::Error;
};

// Iterative procedure or quadrature that did not converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Request refused because it would exceed the configured memory budget.
class MemoryGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace kfuzzy
