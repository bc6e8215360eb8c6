#pragma once

// Randomised numerical checks of the geometric identities: isometry,
// curvature, Kahler structure and the Hopf layer.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hs2 {

inline constexpr int kReportSchemaVersion = 1;

struct IdentityResult {
  std::string identity;
  int n_samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  int n = 256;
  std::uint64_t seed = 20240607;
  int samples = 100;
  /// Per-identity tolerance overrides keyed by identity name.
  std::map<std::string, double> tolerances;
  /// Name of one identity whose check gets a deliberate sign error.
  std::string fault;
};

struct VerifyReport {
  int schema_version = kReportSchemaVersion;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityResult> results;

  bool all_pass() const;
};

/// Names of every identity in the suite, in report order.
std::vector<std::string> identity_names();

VerifyReport run_verification(const VerifyOptions& opts);

}  // namespace hs2
