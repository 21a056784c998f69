#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace websym {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed expression or web-definition text; `position` is a byte offset.
struct ParseError : Error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& what)
      : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

/// Input violates a documented precondition (bad degree, zero leading
/// coefficient, mismatched coordinates, ...).
struct ValidationError : Error {
  using Error::Error;
};

/// Coincident slopes: the leaves are not in general position.
struct NotInGeneralPosition : ValidationError {
  using ValidationError::ValidationError;
};

/// A foliation has dF/dy == 0; its leaves are vertical lines and carry no
/// finite slope. `leaf` is 1-based.
struct VerticalLeafError : ValidationError {
  int leaf;
  VerticalLeafError(int leaf_index, const std::string& what)
      : ValidationError(what), leaf(leaf_index) {}
};

/// An exact-pipeline operation was asked to run on non-rational data.
struct NotRationalError : ValidationError {
  using ValidationError::ValidationError;
};

/// The supplied field does not satisfy the determining equations.
struct NotASymmetryError : ValidationError {
  using ValidationError::ValidationError;
};

/// Numeric evaluation failed (unbound variable, ln(0), ...).
struct EvalError : Error {
  using Error::Error;
};

/// ln or a fractional power was evaluated on the closed negative real axis.
struct BranchCutError : EvalError {
  using EvalError::EvalError;
};

/// Division by zero / evaluation at a pole.
struct PoleError : EvalError {
  using EvalError::EvalError;
};

/// Every candidate sample point was excluded by the singular locus.
struct EmptyPlanError : Error {
  using Error::Error;
};

/// The exact solver would exceed the configured memory budget.
struct ResourceError : Error {
  using Error::Error;
};

/// An internal exactness invariant failed (e.g. a fraction-free elimination
/// step left a remainder). Always a bug, never a user error.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace websym
