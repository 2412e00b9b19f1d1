#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace normfilt {

// Exit codes surfaced by the command-line tool.
enum class ErrorKind { parse = 2, precondition = 3, horizon = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

/// Malformed input text. Carries a 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A mathematical precondition does not hold (dimension mismatch, ideal not
/// m-primary, semigroup with gcd != 1, infinite colength, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg)
      : Error(ErrorKind::precondition, msg) {}
};

/// The computed range of degrees is too short to decide the question asked.
class HorizonError : public Error {
 public:
  explicit HorizonError(const std::string& msg)
      : Error(ErrorKind::horizon, msg) {}
};

}  // namespace normfilt
