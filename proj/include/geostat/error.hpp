#pragma once

#include <stdexcept>
#include <string>

namespace geostat {

enum class ErrorCode {
  DuplicatePosition,
  NonPositiveAlpha,
  NegativeBeta,
  ZeroBetaWithStrictFlag,
  EmptyHoleSet,
  EvaluationAtHole,
  IndexOutOfRange,
  HoleAtOrigin,
  SurfaceThroughHole,
  EmptyRegion,
  DivergentVolume,
  Unreachable,
  ScaleViolatesSeparation,
  NonPositiveInput,
  DegenerateGrid,
  NoConvergence,
  CollapseTowardHole,
  RangeEmpty,
  ZeroScale,
  HypothesisViolated,
  LambdaExceedsDiameter,
  NoFeasibleEpsilon,
  BadConfig,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicatePosition: return "DuplicatePosition";
    case ErrorCode::NonPositiveAlpha: return "NonPositiveAlpha";
    case ErrorCode::NegativeBeta: return "NegativeBeta";
    case ErrorCode::ZeroBetaWithStrictFlag: return "ZeroBetaWithStrictFlag";
    case ErrorCode::EmptyHoleSet: return "EmptyHoleSet";
    case ErrorCode::EvaluationAtHole: return "EvaluationAtHole";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::HoleAtOrigin: return "HoleAtOrigin";
    case ErrorCode::SurfaceThroughHole: return "SurfaceThroughHole";
    case ErrorCode::EmptyRegion: return "EmptyRegion";
    case ErrorCode::DivergentVolume: return "DivergentVolume";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::ScaleViolatesSeparation: return "ScaleViolatesSeparation";
    case ErrorCode::NonPositiveInput: return "NonPositiveInput";
    case ErrorCode::DegenerateGrid: return "DegenerateGrid";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::CollapseTowardHole: return "CollapseTowardHole";
    case ErrorCode::RangeEmpty: return "RangeEmpty";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::LambdaExceedsDiameter: return "LambdaExceedsDiameter";
    case ErrorCode::NoFeasibleEpsilon: return "NoFeasibleEpsilon";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "UnknownError";
}

}  // namespace geostat
