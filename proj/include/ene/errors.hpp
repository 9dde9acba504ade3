#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ene {

// Base for all library errors. what() is a single line, machine-readable
// enough for the CLI to map onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation requires division by integers but the ring is not a Q-algebra.
class NotQAlgebraError : public Error {
 public:
  explicit NotQAlgebraError(const std::string& op)
      : Error("NotQAlgebra: " + op + " requires a Q-algebra coefficient ring") {}
};

// Binary operation received operands over different rings.
class RingMismatchError : public Error {
 public:
  explicit RingMismatchError(const std::string& op)
      : Error("RingMismatch: " + op + " requires operands over the same ring") {}
};

// A coefficient that must be invertible is not. index is 1-based where the
// failing coefficient lives in a series, 0 when not applicable.
class NotInvertibleError : public Error {
 public:
  NotInvertibleError(const std::string& op, int idx)
      : Error("NotInvertible: " + op + " needs an invertible coefficient" +
              (idx > 0 ? " at index " + std::to_string(idx) : "")),
        index(idx) {}
  int index;
};

// Iterative numeric routine failed to meet its residual target.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

// Text input rejected; column is a 1-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t col)
      : Error("parse error at column " + std::to_string(col) + ": " + msg),
        column(col) {}
  std::size_t column;
};

}  // namespace ene
