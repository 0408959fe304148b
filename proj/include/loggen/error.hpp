#pragma once

#include <stdexcept>
#include <string>

namespace loggen {

// Lexical failure: unterminated string/char literal or block comment.
struct LexError : std::runtime_error {
  std::size_t offset;
  LexError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " at byte " + std::to_string(off)), offset(off) {}
};

struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InfeasibleDistribution : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyTarget : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when an external predictor process misbehaves. `kind` tells the
// caller whether the process failed, truncated its output, or emitted a
// line the task cannot accept.
struct PredictorFailure : std::runtime_error {
  enum class Kind { exit_status, line_count, malformed_line, spawn };
  Kind kind;
  PredictorFailure(Kind k, const std::string& what)
      : std::runtime_error(what), kind(k) {}
};

}  // namespace loggen
