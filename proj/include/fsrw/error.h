#ifndef FSRW_ERROR_H_
#define FSRW_ERROR_H_

#include <stdexcept>
#include <string>

namespace fsrw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different symbol tables, bad state ids, malformed
// machines.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A transduction was supplied where a language is required.
class CoercionError : public Error {
 public:
  using Error::Error;
};

// Input string contains a glyph the symbol table does not know.
class UnknownSymbolError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Unknown macro, arity mismatch, recursion, bad builtin arguments.
class MacroError : public Error {
 public:
  using Error::Error;
};

// Malformed text dump.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace fsrw

#endif  // FSRW_ERROR_H_
