#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homfree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator name does not match `[A-Za-z_][A-Za-z0-9_]*`.
class NameFormatError : public Error {
 public:
  using Error::Error;
};

/// Attempt to build a word with no letters. H(X) has no identity element.
class EmptyWordError : public Error {
 public:
  EmptyWordError() : Error("empty word not in H(X)") {}
};

/// An operation was called on an input that violates its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class MissingAssignmentError : public Error {
 public:
  explicit MissingAssignmentError(const std::string& gen)
      : Error("no assignment for generator '" + gen + "'"), generator_(gen) {}
  const std::string& generator() const noexcept { return generator_; }

 private:
  std::string generator_;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Algebra-only syntax (sums, scalars) used where a bracketed word is required.
class ModeError : public Error {
 public:
  using Error::Error;
};

}  // namespace homfree
