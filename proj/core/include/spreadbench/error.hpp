#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spreadbench {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or CSV input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

  /// Same error with `context` (usually a file name) prepended.
  ParseError with_context(const std::string& context) const {
    return ParseError(Raw{}, context + ": " + what(), line_);
  }

 private:
  struct Raw {};
  ParseError(Raw, const std::string& full, std::size_t line) : Error(full), line_(line) {}

  std::size_t line_;
};

/// A caller violated a documented precondition (empty graph, p out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An iterative solver hit its iteration cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double residual)
      : Error(message + " (last residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace spreadbench
