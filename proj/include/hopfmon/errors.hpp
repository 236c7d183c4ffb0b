#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfmon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Interface or dimension mismatch between maps.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Operands live over different base fields, or an invalid field was requested.
class FieldError : public Error {
 public:
  using Error::Error;
};

// A builder or operation was called on data violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed text input; line and column are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? what
                        : what + " at line " + std::to_string(line) + ", column " +
                              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Structured-file content that parses but violates the instance schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfmon
