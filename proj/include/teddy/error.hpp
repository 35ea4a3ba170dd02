#pragma once

#include <stdexcept>
#include <string>

namespace teddy {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Tokenization failure (currently only unterminated string literals).
class LexError : public Error {
 public:
  LexError(const std::string& message, int line, int column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Malformed input text (unified diffs, manifests, config files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A referenced entity does not exist.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Catalog or ground-truth data failed validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Filesystem or subprocess failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace teddy
