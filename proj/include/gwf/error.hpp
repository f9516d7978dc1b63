#pragma once

#include <stdexcept>
#include <string>

namespace gwf {

/// Raised when an operation's precondition or a value invariant is violated.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the text/JSON readers on malformed input.
class ParseError : public DomainError {
 public:
  explicit ParseError(const std::string& what) : DomainError(what) {}
};

}  // namespace gwf
