#include "tcbetti/error.hpp"

namespace tcb {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotInSemigroup: return "NotInSemigroup";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::AmbiguousMultiplicity: return "AmbiguousMultiplicity";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::NoBasisStated: return "NoBasisStated";
    case ErrorCode::NoGStarStated: return "NoGStarStated";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::NotVerified: return "NotVerified";
    case ErrorCode::NotMonomial: return "NotMonomial";
    case ErrorCode::CutoffExceeded: return "CutoffExceeded";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace tcb
