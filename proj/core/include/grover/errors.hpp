#pragma once

#include <stdexcept>
#include <string>

namespace grover {

/// Malformed ring spec, unknown family name, bad CLI value.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A desk-scale limit (ring order, vertex count, time bound) was exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (non-regular graph, loops on a
/// walk substrate, mixed-ring operands, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Eigenvalue of algebraic degree > 2 where only rational/quadratic values
/// are representable.
class UnsupportedDegree : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace grover
