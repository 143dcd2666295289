#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace degcorr {

enum class ErrorCode {
  empty_graph,
  zero_variance,
  degenerate_size,
  unbalanced_stubs,
  balance_failed,
  invalid_argument,
  parse_error,
};

std::string_view to_string(ErrorCode code);

/// Base error for every recoverable failure in the library. The code is
/// machine-readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the edge-list reader; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace degcorr
