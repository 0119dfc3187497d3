#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace marked {

/// Base of every error the library reports to callers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// Mathematically invalid input: not an order ideal, non-monic head, ring
/// mismatch, singular evaluation matrix, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace marked
