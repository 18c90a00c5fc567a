#pragma once
/// @file errors.hpp
/// @brief Exception hierarchy used across the library.
///
/// Errors are split into user-facing classes (bad input: syntax,
/// out-of-range parameters, invalid arguments, violated operation
/// preconditions) and internal classes (a combinatorial invariant that
/// the mathematics guarantees failed to hold at run time).  The command
/// line tool maps the former to exit code 2 and the latter to exit
/// code 1.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minorb {

/// Base class of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument value: unknown type letter, vector that is not a
/// root, parameters outside a function's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input whose parameters violate a documented bound
/// (for example so(0,7), or a rank outside the family's range).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.  Carries the 0-based offset of the first
/// offending character in the original string.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An operation was invoked outside its stated precondition (subset
/// relations between cross sets, querying a quantity that is undefined
/// for the given orbit, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A marked sub-diagram did not match any real-form pattern.  This
/// cannot happen for sub-diagrams produced by the erasure operations;
/// it indicates hand-built input that is not a valid diagram.
class RecognitionError : public Error {
 public:
  using Error::Error;
};

/// A mathematically guaranteed invariant failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace minorb
