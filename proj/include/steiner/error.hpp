#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steiner {

enum class ErrorCode {
  PairUncovered,
  PairDoubleCovered,
  BadOrder,
  MalformedTriple,
  UnknownModel,
  SyntaxError,
  TooManyTriples,
  DegreeTooLarge,
  DegreeMismatch,
  NotSubgroup,
  DimensionMismatch,
  ZeroVector,
  NotSkewSymmetric,
  DegenerateSpectrum,
  BadArgument,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PairUncovered: return "PairUncovered";
    case ErrorCode::PairDoubleCovered: return "PairDoubleCovered";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::MalformedTriple: return "MalformedTriple";
    case ErrorCode::UnknownModel: return "UnknownModel";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::TooManyTriples: return "TooManyTriples";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

/// Resource caps (enumeration size, search degree) as opposed to bad input.
constexpr bool is_resource_error(ErrorCode code) noexcept {
  return code == ErrorCode::TooManyTriples || code == ErrorCode::DegreeTooLarge;
}

/// Single exception type for the library. `what()` is "<Code>: <detail>".
/// Pair errors carry the offending points; syntax errors carry a 1-based
/// line/column.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  static Error pair(ErrorCode code, int p, int q) {
    Error e(code, "(" + std::to_string(p) + "," + std::to_string(q) + ")");
    e.p_ = p;
    e.q_ = q;
    return e;
  }

  static Error syntax(int line, int column, const std::string& detail) {
    Error e(ErrorCode::SyntaxError,
            "line " + std::to_string(line) + " column " + std::to_string(column) + ": " + detail);
    e.line_ = line;
    e.column_ = column;
    return e;
  }

  ErrorCode code() const noexcept { return code_; }
  int first_point() const noexcept { return p_; }
  int second_point() const noexcept { return q_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  int p_ = 0;
  int q_ = 0;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace steiner
