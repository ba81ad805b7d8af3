// Exception hierarchy shared across the library. The CLI maps these types to
// process exit codes, so new failure modes should reuse an existing type when
// the meaning fits.
#pragma once

#include <stdexcept>

namespace dyngame {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or semantically invalid input (files, parameters).
struct ParseError : Error {
  using Error::Error;
};
struct InvalidParameterError : Error {
  using Error::Error;
};

// A node set that misses some root-to-leaf path, or a stopping time used
// against a tree it does not belong to.
struct NotAStoppingTimeError : Error {
  using Error::Error;
};
struct TreeMismatchError : Error {
  using Error::Error;
};

// An adapted process that is not defined on every node.
struct IncompleteProcessError : Error {
  using Error::Error;
};

// Operation evaluated outside its domain (expectation at a leaf, utility
// inversion outside the range).
struct DomainError : Error {
  using Error::Error;
};
struct InversionDomainError : DomainError {
  using DomainError::DomainError;
};

// Solver refusal: the game violates the dominance / strict-gap assumptions.
struct AssumptionError : Error {
  using Error::Error;
};

// Enumeration refused because the stopping-time count exceeds the bound.
struct TooLargeError : Error {
  using Error::Error;
};

struct NotZeroSumError : Error {
  using Error::Error;
};

// Violation of an internal guarantee (e.g. the iteration bound). Indicates
// an implementation bug, never bad user input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace dyngame
