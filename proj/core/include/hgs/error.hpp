#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hgs {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: degree mismatch, non-prime modulus, bad matrix, ...
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A configured size or search limit was hit. Never a silent truncation.
class LimitExceeded : public Error {
public:
  using Error::Error;
};

class CapExceeded : public LimitExceeded {
public:
  using LimitExceeded::LimitExceeded;
};

class BudgetExceeded : public LimitExceeded {
public:
  using LimitExceeded::LimitExceeded;
};

/// G' contains a nontrivial normal subgroup of G, so (G, G') does not model
/// the normal closure of an extension.
class NotNormalClosure : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hgs
