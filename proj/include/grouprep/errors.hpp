#pragma once
#include <stdexcept>
#include <string>

namespace grouprep {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic: division by a zero scalar or inversion of zero.
struct DivisionByZeroError : Error {
  DivisionByZeroError() : Error("division by zero") {}
  explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

// A square root that does not exist in the coefficient field.
struct NotRepresentableError : Error {
  using Error::Error;
};

// Malformed textual input (scalars, polynomials, group files, CLI values).
struct ParseError : Error {
  using Error::Error;
};

// Generator closure exceeded the configured bound.
struct OrderExceededError : Error {
  using Error::Error;
};

// Mixing incompatible element kinds or groups in one operation.
struct MixedKindError : Error {
  using Error::Error;
};

// Dimension or degree mismatch between operands.
struct DimensionMismatchError : Error {
  using Error::Error;
};

// An operation needed an invertible matrix and got a singular one.
struct SingularMatrixError : Error {
  using Error::Error;
};

// A subset of group elements that is not closed / not a subgroup.
struct NotASubgroupError : Error {
  using Error::Error;
};

// Quotient construction over a non-normal subgroup.
struct NotNormalError : Error {
  using Error::Error;
};

// A bound on supported group order was exceeded.
struct BoundExceededError : Error {
  using Error::Error;
};

// A map that was expected to be a homomorphism is not one.
struct NotAHomomorphismError : Error {
  using Error::Error;
};

// Character-table machinery: a trace that is not constant on a class.
struct TraceNotClassConstantError : Error {
  using Error::Error;
};

// A multiplicity that must be a non-negative integer failed that check.
struct NonIntegerMultiplicityError : Error {
  using Error::Error;
};

// Lifting modular character values into the coefficient field failed
// (the values live in a cyclotomic field the scalar type cannot hold).
struct LiftFailureError : Error {
  using Error::Error;
};

// A projection produced only zero vectors where a nonzero one was required.
struct NoComponentError : Error {
  using Error::Error;
};

}  // namespace grouprep
