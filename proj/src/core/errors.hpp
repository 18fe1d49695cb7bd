#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace meshperm {

// Malformed values handed to a constructor or operation (duplicate entries,
// bound violations, non-permutation words).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input outside the domain an operation is defined on
// (k < 2 for a pattern family, phi of the empty permutation, unknown claim).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A claim id that is not in the verification registry.
class UnknownClaim : public DomainError {
 public:
  using DomainError::DomainError;
};

// Pattern DSL / permutation text that does not follow the grammar.
// position() is a 0-based byte offset into the original text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at offset " + std::to_string(position)),
        message_(message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  // Message without the offset suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

}  // namespace meshperm
