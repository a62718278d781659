#pragma once

#include <stdexcept>
#include <string>

namespace equilocal {

/// Raised when an exact division has a zero divisor.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an operation is called outside its documented domain.
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed or invalid interchange document. `location` is either a byte
/// offset ("byte 17") for syntax errors or a JSON pointer ("/points/1/weights/0")
/// for values that parse but violate an invariant.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& location, const std::string& reason)
      : std::runtime_error(location + ": " + reason), location_(location), reason_(reason) {}

  const std::string& location() const noexcept { return location_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string location_;
  std::string reason_;
};

}  // namespace equilocal
