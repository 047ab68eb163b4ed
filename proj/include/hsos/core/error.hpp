#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsos {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Malformed polynomial text; `position` is the 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
};

/// An argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A theorem-facing operation was called on inputs that violate the
/// theorem's hypotheses (e.g. g already lies in I+).
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// A generating set that is not minimal where minimality is required.
class NonMinimalGenerators : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long estimate)
      : Error(what), estimate_(estimate) {}
  unsigned long long estimate() const { return estimate_; }

 private:
  unsigned long long estimate_;
};

/// An internal consistency contract failed. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hsos
