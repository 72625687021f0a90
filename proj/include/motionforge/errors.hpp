#pragma once

#include <stdexcept>
#include <string>

namespace mf {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (bad generator, wrong domain, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A configured enumeration or search cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; indicates a bug or unsupported input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace mf
