#pragma once

#include <stdexcept>
#include <string>

namespace robustcover {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document or command line (CLI exit code 2).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An instance violates a structural invariant (negative cost,
/// disconnected graph, item covered by no set, ...).
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// A requirement cannot be satisfied even by the full ground set.
class InfeasibleRequirement : public Error {
 public:
  using Error::Error;
};

/// An exact oracle was asked to run beyond its configured limits.
/// Refusal is explicit; results are never silently truncated.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The partition-matroid family is larger than the enumeration cap.
class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic left the 64-bit range.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace robustcover
