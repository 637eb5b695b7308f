#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fodesc {

// Malformed user input: CSV rows, profile literals, out-of-range parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Evaluation of a formula whose free variables are not all bound.
class EvaluationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A search (game or enumeration) ran past its configured node budget.
// This says nothing about the answer, only that it was not computed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fodesc
