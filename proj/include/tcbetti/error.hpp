#pragma once

#include <stdexcept>
#include <string>

namespace tcb {

enum class ErrorCode {
  InvalidParams,
  NotInSemigroup,
  DimensionMismatch,
  ZeroPolynomial,
  NotSquare,
  IndexOutOfRange,
  SizeMismatch,
  RankMismatch,
  AmbiguousMultiplicity,
  UnsupportedCase,
  NoBasisStated,
  NoGStarStated,
  NegativeExponent,
  NotVerified,
  NotMonomial,
  CutoffExceeded,
  DegreeCapExceeded,
  Parse,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry a 1-based location; line is 0 when the input is a
// single expression rather than a file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorCode::Parse, what), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tcb
