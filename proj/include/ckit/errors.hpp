#pragma once

#include <stdexcept>
#include <string>

namespace ckit {

/// Root of every error thrown by the toolkit. The CLI maps subclasses of
/// InputError to exit status 2 and CheckFailure to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's domain.
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidIndex : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class NotUnimodular : public InputError {
 public:
  using InputError::InputError;
};

class InvalidModulus : public InputError {
 public:
  using InputError::InputError;
};

/// Matrix is not in the requested congruence subgroup.
class NotMember : public InputError {
 public:
  using InputError::InputError;
};

/// Unsupported parameter combination (e.g. a solver level without a generating set).
class Unsupported : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class BudgetExceeded : public InputError {
 public:
  using InputError::InputError;
};

class NotAbelian : public InputError {
 public:
  using InputError::InputError;
};

/// A verified identity or claim did not hold.
class CheckFailure : public Error {
 public:
  using Error::Error;
};

/// An internal invariant was violated; indicates a bug or corrupted upstream data.
class InvariantViolation : public CheckFailure {
 public:
  using CheckFailure::CheckFailure;
};

class RelatorFailure : public CheckFailure {
 public:
  using CheckFailure::CheckFailure;
};

}  // namespace ckit
