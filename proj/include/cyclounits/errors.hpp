#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclounits {

/// Failures caused by arguments outside an operation's domain. The CLI maps
/// every subclass to exit code 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public DomainError {
 public:
  using DomainError::DomainError;
};

class SizeLimit : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Raised by the expression parser when expansion would exceed the degree budget.
class DegreeLimit : public SizeLimit {
 public:
  using SizeLimit::SizeLimit;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

class BothZero : public DomainError {
 public:
  using DomainError::DomainError;
};

class ShapeNotCyclotomic : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed polynomial text. `position()` is the 0-based byte offset of the
/// offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cyclounits
