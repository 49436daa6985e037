#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kkg {

/// Inversion of a zero divisor or a non-unit determinant.
struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Literal could not be parsed. `position` is a byte offset into the input.
struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

/// A computation would exceed a configured size cap.
struct CapExceeded : std::length_error {
  using std::length_error::length_error;
};

/// An internal consistency check failed; always a bug, never bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace kkg
