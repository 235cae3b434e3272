#include "shiftlab/error.hpp"

namespace shiftlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::AugmentationImpossible: return "AugmentationImpossible";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::GenericityFailure: return "GenericityFailure";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace shiftlab
