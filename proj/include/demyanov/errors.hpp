#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace demyanov {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A non-empty input (point list, collection, document) was empty.
class EmptyInput : public Error {
 public:
  using Error::Error;
};

/// A fan sector was requested between a ray and itself.
class DegenerateSector : public Error {
 public:
  using Error::Error;
};

/// An internal geometric invariant failed. Indicates a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Random family generation could not find enough distinct members.
class GenerationFailed : public Error {
 public:
  using Error::Error;
};

/// One of the relations of the counterexample claim did not hold.
class ClaimViolated : public Error {
 public:
  using Error::Error;
};

/// Malformed family document or rational literal. Line and column are
/// 1-based; zero means the location is unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace demyanov
