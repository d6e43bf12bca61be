#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chainhull {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an operation that needs at least one point receives none.
struct EmptyInput : Error {
  using Error::Error;
};

/// Raised when an input cannot yield a proper polygon or hull (fewer than
/// three distinct vertices, or all vertices collinear).
struct DegenerateInput : Error {
  using Error::Error;
};

/// Raised by file readers on malformed content. Carries the 1-based line
/// number for text formats (0 for binary payload errors).
struct ParseError : Error {
  ParseError(std::size_t line_number, const std::string& reason)
      : Error(line_number > 0
                  ? "parse error at line " + std::to_string(line_number) + ": " + reason
                  : "parse error: " + reason),
        line(line_number) {}
  std::size_t line;
};

/// Raised when a coordinate parses as NaN or an infinity.
struct NonFiniteCoordinate : Error {
  using Error::Error;
};

/// Raised on filesystem failures (unreadable input, unwritable output).
struct IoError : Error {
  using Error::Error;
};

}  // namespace chainhull
