#pragma once

#include <stdexcept>
#include <string>

namespace hs2 {

enum class ErrorKind {
  InvalidArgument,
  NonZeroMean,
  NotMonotone,
  VanishingModulus,
  UnwrapAmbiguity,
  NotUnitNorm,
  NotTangent,
  ZeroTangent,
  AntipodalOrIdentity,
  AtPole,
  ProportionalPoints,
  ZeroData,
  BeyondBlowup,
  AtIdentityOrAntipode,
  DegeneratePlane,
  ZeroAtBasePoint,
  BaseMismatch,
  ZeroAtChartPoint,
  ConfigError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every precondition violation in the library surfaces as an `Error`
/// carrying the kind, so callers can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hs2
