#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace discmom {

/// A polynomial or matrix index asks for more moments than are available.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value lies outside the set an operation is defined on (e.g. a non-grid root).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An explicit grid prefix is too short to answer a floor/successor query.
class GridExhausted : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A caller-guaranteed precondition (e.g. I-realizable prefix) does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency check failed; indicates a bug rather than bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input exceeds a configured size limit (e.g. the moment-count soft limit).
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        message_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

  /// The text without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

}  // namespace discmom
