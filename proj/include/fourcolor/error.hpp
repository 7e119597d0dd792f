#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fourcolor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (bad transition label,
/// out-of-range letter, improper coloring seed, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Malformed text input. Carries the 1-based line number when known.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A graph does not satisfy the structural property an operation needs.
class GraphError : public Error {
public:
  using Error::Error;
};

}  // namespace fourcolor
