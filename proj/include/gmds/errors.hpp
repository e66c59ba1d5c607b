#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gmds {

/// Bad caller input: malformed arguments, files, or preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EncodingError : public InputError {
 public:
  using InputError::InputError;
};

/// A metric whose denominator is empty (e.g. empty reference summary).
class UndefinedMetricError : public InputError {
 public:
  using InputError::InputError;
};

class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request is well formed but outside what the routine will attempt
/// (e.g. brute force on too many vertices).
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gmds
