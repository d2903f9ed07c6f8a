#pragma once

#include <stdexcept>
#include <string>

namespace erdos {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `token` is the offending lexeme, `line` is 1-based
// (0 when the input was a single literal).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string token, int line = 0)
      : Error(what), token_(std::move(token)), line_(line) {}

  const std::string& token() const noexcept { return token_; }
  int line() const noexcept { return line_; }

 private:
  std::string token_;
  int line_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Argument outside a documented range, including size caps.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A matrix failed the bistochastic check. `index` is 0-based; `kind` says
// whether it refers to a row, a column, or a single entry.
class NotBistochasticError : public Error {
 public:
  enum class Kind { row, column, entry, shape };

  NotBistochasticError(const std::string& what, Kind kind, int index)
      : Error(what), kind_(kind), index_(index) {}

  Kind kind() const noexcept { return kind_; }
  int index() const noexcept { return index_; }

 private:
  Kind kind_;
  int index_;
};

// reduce_linear could not find a linearly independent support with
// nonnegative weights.
class ReductionError : public Error {
 public:
  using Error::Error;
};

// A Gram system was asked for a solution but its permutation matrices are
// linearly dependent.
class DependentSetError : public Error {
 public:
  using Error::Error;
};

// A self-check that must hold by construction failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace erdos
