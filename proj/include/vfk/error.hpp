#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vfk/rational.hpp"

namespace vfk {

enum class ErrorCode {
  InvalidArgument,
  ShapeMismatch,
  SumNotZero,
  ObtuseViolation,
  RankDeficient,
  NotSymmetric,
  RowSumNotZero,
  WrongRank,
  LengthMismatch,
  EmptySide,
  TooLarge,
  GramCoordsMismatch,
  ZeroWeightCut,
  ImproperAssignment,
  ParseError,
  ShapeError,
};

const char* error_code_name(ErrorCode code);

/// Structured payload attached to an Error. Indices are 0-based; messages
/// render them 1-based.
struct ErrorDetail {
  std::vector<std::size_t> indices;
  std::optional<Rational> value;
  std::size_t line = 0;    // 1-based, parse errors only
  std::size_t column = 0;  // 1-based, parse errors only
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, ErrorDetail detail = {})
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const ErrorDetail& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  ErrorDetail detail_;
};

}  // namespace vfk
