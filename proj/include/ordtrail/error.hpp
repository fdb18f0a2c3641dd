#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordtrail {

enum class ErrorCode {
  InvalidVertexCount,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  DuplicateWeight,
  NonPositiveWeight,
  NonIntegerWeight,
  NotSurjective,
  RankOutOfRange,
  WrongPermutationLength,
  NotAPermutation,
  TooManyEdges,
  OutOfRange,
  StepExhausted,
  InvalidGraph,
  ExhaustiveTooLarge,
  InvalidStructure,
  ParseError,
};

inline constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidVertexCount: return "InvalidVertexCount";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DuplicateWeight: return "DuplicateWeight";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NonIntegerWeight: return "NonIntegerWeight";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::WrongPermutationLength: return "WrongPermutationLength";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::StepExhausted: return "StepExhausted";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::ExhaustiveTooLarge: return "ExhaustiveTooLarge";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable code. Everything in the library
/// that can fail on bad input throws this.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure in a text input; line is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace ordtrail
