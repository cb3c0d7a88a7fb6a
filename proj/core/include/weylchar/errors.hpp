#ifndef WEYLCHAR_ERRORS_HPP
#define WEYLCHAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weylchar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Caller violated a precondition (mismatched moduli, bad indices, ...).
/// The CLI maps these to exit code 2.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& msg) : Error(msg) {}
};

/// A computation could not be completed (term guard, exponent overflow).
/// The CLI maps these to exit code 1.
class ComputeError : public Error {
 public:
  explicit ComputeError(const std::string& msg) : Error(msg) {}
};

/// Syntax error from the expression parser, with a 1-based position.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& msg, int line, int column)
      : UsageError(msg + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace weylchar

#endif  // WEYLCHAR_ERRORS_HPP
