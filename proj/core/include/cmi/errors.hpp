#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain: not m-primary, not complete under
/// the strict policy, degenerate geometry, and so on.
class DomainError : public Error {
public:
  using Error::Error;
};

class NotPrimaryError : public DomainError {
public:
  using DomainError::DomainError;
};

class NotCompleteError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Checked integer arithmetic left the range of Int.
class OverflowError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Two independent computations of the same quantity disagreed, or a value
/// that must be integral was not. Always a bug, never a user error.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

/// Malformed ideal expression. `position()` is the 0-based offset into the
/// source text where parsing stopped.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace cmi
