#pragma once

#include <stdexcept>
#include <string>

namespace shiftlab {

enum class ErrorCode {
  EmptyInput,
  VertexOutOfRange,
  NotAFace,
  NotUniform,
  DimensionMismatch,
  SizeMismatch,
  SingularBasis,
  OutOfRange,
  ResourceLimit,
  HypothesisViolated,
  AugmentationImpossible,
  BadSize,
  BadRank,
  GenericityFailure,
  NonTerminating,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace shiftlab
