#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evalcode {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text that does not match the element, polynomial or point-file grammar.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An exhaustive search would exceed the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace evalcode
