#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uag {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad syntax, unknown symbol, arity mismatch, bad file.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax error with a 1-based line/column position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

/// An enumeration would exceed a configured cap. `required` is the count the
/// operation would have needed (saturated at SIZE_MAX).
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t required, std::size_t cap);

  std::size_t required() const noexcept { return required_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

/// Values from different signatures, variable sets or fields were combined.
class MismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace uag
