#include "vfk/error.hpp"

namespace vfk {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SumNotZero: return "SumNotZero";
    case ErrorCode::ObtuseViolation: return "ObtuseViolation";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::RowSumNotZero: return "RowSumNotZero";
    case ErrorCode::WrongRank: return "WrongRank";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptySide: return "EmptySide";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::GramCoordsMismatch: return "GramCoordsMismatch";
    case ErrorCode::ZeroWeightCut: return "ZeroWeightCut";
    case ErrorCode::ImproperAssignment: return "ImproperAssignment";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShapeError: return "ShapeError";
  }
  return "Unknown";
}

}  // namespace vfk
