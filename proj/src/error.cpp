#include "quivergrass/error.hpp"

namespace qg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::NonNormedRelation: return "NonNormedRelation";
    case ErrorCode::ShortRelation: return "ShortRelation";
    case ErrorCode::LengthExceedsBound: return "LengthExceedsBound";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::InvalidSkeleton: return "InvalidSkeleton";
    case ErrorCode::InvalidModule: return "InvalidModule";
    case ErrorCode::InvalidTops: return "InvalidTops";
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::TopNotDominated: return "TopNotDominated";
    case ErrorCode::MissingCoordinate: return "MissingCoordinate";
    case ErrorCode::RankDrop: return "RankDrop";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Cancelled: return "Cancelled";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace qg
