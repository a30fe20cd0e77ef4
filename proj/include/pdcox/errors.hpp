#pragma once

#include <stdexcept>
#include <string>

namespace pdcox {

// Base for everything thrown by the library. CLI maps subclasses to exit codes:
// input problems -> 2, mathematical rejection -> 1, resource guards -> 3.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- input / schema problems ---------------------------------------------
struct InputError : Error {
  using Error::Error;
};

struct SchemaError : InputError {
  int line;  // 1-based line in the source document, 0 if unknown
  SchemaError(const std::string& msg, int line_ = 0)
      : InputError(line_ > 0 ? msg + " (line " + std::to_string(line_) + ")" : msg),
        line(line_) {}
};

struct DuplicatePointError : InputError {
  using InputError::InputError;
};

struct RecessionMismatchError : InputError {
  using InputError::InputError;
};

struct NonFullDimensionalConeError : InputError {
  using InputError::InputError;
};

struct BranchMismatchError : InputError {
  using InputError::InputError;
};

// --- mathematical rejection ------------------------------------------------
struct MathError : Error {
  using Error::Error;
};

struct NotProperError : MathError {
  using MathError::MathError;
};

struct NotKltError : MathError {
  using MathError::MathError;
};

struct NotLogFanoError : MathError {
  using MathError::MathError;
};

struct NotAbelianError : MathError {
  using MathError::MathError;
};

struct NotNormalError : MathError {
  using MathError::MathError;
};

struct UnboundedError : MathError {
  using MathError::MathError;
};

// Internal consistency failure: the fundamental group of a universal-cover
// pullback came out non-abelian. Indicates a bug rather than bad input.
struct CoverPi1NotAbelianError : MathError {
  using MathError::MathError;
};

// --- resource guards ---------------------------------------------------------
struct GuardError : Error {
  using Error::Error;
};

struct DimensionGuardError : GuardError {
  using GuardError::GuardError;
};

struct CosetOverflowError : GuardError {
  using GuardError::GuardError;
};

struct SizeGuardError : GuardError {
  using GuardError::GuardError;
};

}  // namespace pdcox
