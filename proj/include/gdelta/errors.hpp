#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gdelta {

enum class ErrorKind {
  Syntax,
  NotPrenex,
  NotClosed,
  NotGround,
  MissingAtom,
  TooManyAtoms,
  TooManyTerms,
  NonGround,
  NotDeltaPrefixed,
  NotHexShape,
  MalformedWitness,
  ArityMismatch,
  BadTrace,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::Syntax, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gdelta
