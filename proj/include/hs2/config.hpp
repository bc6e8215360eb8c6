#pragma once

// Run configuration: a plain key=value file whose entries are overridden by
// command-line flags. Every key is documented in README.md.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "hs2/geodesics.hpp"
#include "hs2/integrator.hpp"
#include "hs2/verify.hpp"

namespace hs2 {

struct RunConfig {
  int n = PeriodicGrid::kDefaultSize;
  /// stationary | smooth-global | hs-blowup | custom
  std::string preset = "smooth-global";
  // Truncated Fourier series, entry k-1 multiplies cos/sin(2 pi k x).
  std::vector<double> u0x_cos, u0x_sin, rho0_cos, rho0_sin;
  double rho0_mean = 0.0;

  double t_end = 2.0;
  double dt = 5e-4;
  int record_every = 200;
  bool dealias = true;
  double blowup_threshold = 1e6;
  /// Time at which logmap/connect/geodesic evaluate the exact geodesic.
  double time = 1.0;

  std::filesystem::path output_dir = "hs2_out";
  std::uint64_t seed = VerifyOptions{}.seed;
  int samples = 100;
  std::map<std::string, double> tolerances;
  std::string fault;

  InitialData initial_data() const;
  IntegratorConfig integrator() const;
  VerifyOptions verify() const;
};

/// Keys accepted in config files and as --key flags (dashes or underscores).
const std::vector<std::string>& config_keys();

using KeyValues = std::map<std::string, std::string>;

/// Parses `key = value` lines; '#' starts a comment. Throws ConfigError.
KeyValues parse_config_text(const std::string& text);
KeyValues read_config_file(const std::filesystem::path& path);

/// Applies entries on top of defaults. Keys starting with "tol." set
/// verification tolerances. Throws ConfigError on unknown keys or bad values.
RunConfig build_config(const KeyValues& kv);

}  // namespace hs2
