#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orlicz {

enum class ErrorKind {
  NonMonotoneDensity,
  OverflowDomain,
  UnknownModel,
  ParamOutOfRange,
  NoBracket,
  DegenerateIndex,
  NonzeroBoundary,
  BadResolution,
  NoPositivePlateau,
  MaxIterations,
  NonDecreasingStep,
  CollapsedPath,
  HypothesisFailed,
  LambdaTooSmall,
  ConfigParse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonMonotoneDensity: return "NonMonotoneDensity";
    case ErrorKind::OverflowDomain: return "OverflowDomain";
    case ErrorKind::UnknownModel: return "UnknownModel";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::NoBracket: return "NoBracket";
    case ErrorKind::DegenerateIndex: return "DegenerateIndex";
    case ErrorKind::NonzeroBoundary: return "NonzeroBoundary";
    case ErrorKind::BadResolution: return "BadResolution";
    case ErrorKind::NoPositivePlateau: return "NoPositivePlateau";
    case ErrorKind::MaxIterations: return "MaxIterations";
    case ErrorKind::NonDecreasingStep: return "NonDecreasingStep";
    case ErrorKind::CollapsedPath: return "CollapsedPath";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::LambdaTooSmall: return "LambdaTooSmall";
    case ErrorKind::ConfigParse: return "ConfigParse";
  }
  return "Unknown";
}

}  // namespace orlicz
