#include "hs2/error.hpp"

namespace hs2 {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonZeroMean: return "NonZeroMean";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::VanishingModulus: return "VanishingModulus";
    case ErrorKind::UnwrapAmbiguity: return "UnwrapAmbiguity";
    case ErrorKind::NotUnitNorm: return "NotUnitNorm";
    case ErrorKind::NotTangent: return "NotTangent";
    case ErrorKind::ZeroTangent: return "ZeroTangent";
    case ErrorKind::AntipodalOrIdentity: return "AntipodalOrIdentity";
    case ErrorKind::AtPole: return "AtPole";
    case ErrorKind::ProportionalPoints: return "ProportionalPoints";
    case ErrorKind::ZeroData: return "ZeroData";
    case ErrorKind::BeyondBlowup: return "BeyondBlowup";
    case ErrorKind::AtIdentityOrAntipode: return "AtIdentityOrAntipode";
    case ErrorKind::DegeneratePlane: return "DegeneratePlane";
    case ErrorKind::ZeroAtBasePoint: return "ZeroAtBasePoint";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::ZeroAtChartPoint: return "ZeroAtChartPoint";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace hs2
