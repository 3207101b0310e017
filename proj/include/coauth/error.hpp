#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coauth {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A record line could not be decoded.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a data invariant (duplicate ids,
/// dangling references, empty network).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Caller-supplied parameters outside their admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver ran out of iterations.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double last_estimate, int iterations)
      : Error(message + " (last estimate " + std::to_string(last_estimate) + " after " +
              std::to_string(iterations) + " iterations)"),
        last_estimate_(last_estimate),
        iterations_(iterations) {}

  double last_estimate() const noexcept { return last_estimate_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double last_estimate_;
  int iterations_;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

}  // namespace coauth
