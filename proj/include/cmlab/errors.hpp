#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched rings or fields, unknown variables, malformed shapes.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in polynomial text or an ideal file. Positions are 1-based;
/// line is 0 when the error came from a single expression.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A Groebner computation ran past its wall-clock budget. Never a statement
/// about the mathematics.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded() : Error("time budget exceeded") {}
};

/// Input to a lab construction violates the hypothesis it was built for.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace cmlab
