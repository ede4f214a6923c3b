#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qg {

enum class ErrorCode {
  EndpointMismatch,
  NonNormedRelation,
  ShortRelation,
  LengthExceedsBound,
  DimensionMismatch,
  InvalidSequence,
  InvalidSkeleton,
  InvalidModule,
  InvalidTops,
  InvalidCurve,
  AlgebraMismatch,
  TopNotDominated,
  MissingCoordinate,
  RankDrop,
  ParseError,
  Cancelled,
  Internal,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace qg
