#pragma once

#include <stdexcept>
#include <string>

namespace pcgauss {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed presentation file or word.
struct SyntaxError : Error {
  SyntaxError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line(line) {}
  std::size_t line;
};

/// Well-formed input that violates a structural invariant.
struct ValidationError : Error {
  using Error::Error;
};

/// Operands bound to different presentations.
struct BindingError : Error {
  BindingError() : Error("elements belong to different presentations") {}
};

struct PreconditionError : Error {
  using Error::Error;
};

/// Oracle refused to run (infinite group, size bound exceeded).
struct OracleError : Error {
  using Error::Error;
};

/// A runtime-checked algorithm invariant failed. Indicates a bug or an
/// inconsistent presentation.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pcgauss
