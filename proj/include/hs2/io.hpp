#pragma once

// CSV and JSON serialisation. CSV numbers use 17 significant digits; JSON
// numbers use the shortest representation that parses back to the same
// double. Both round-trip bit-exactly.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "hs2/geodesics.hpp"
#include "hs2/integrator.hpp"
#include "hs2/verify.hpp"

namespace hs2::io {

using nlohmann::json;

std::string format_double(double v);

void write_csv(const std::filesystem::path& path, const RealFunction& f);
void write_csv(const std::filesystem::path& path, const ComplexFunction& f);
RealFunction read_real_csv(const std::filesystem::path& path);
ComplexFunction read_complex_csv(const std::filesystem::path& path);

/// Columns t, x, u, rho; one row per (time, node).
void write_trajectory_csv(const std::filesystem::path& path, const std::vector<double>& times,
                          const std::vector<TangentVector>& states);

json to_json(const GroupElement& a);
GroupElement group_element_from_json(const json& j);

json to_json(const BlowupReport& r);
json to_json(const VerifyReport& r);
json to_json(const LogResult& r);

struct ComparisonRow {
  double t;
  double rel_l2_u;
  double rel_l2_rho;
};
json to_json(const std::vector<ComparisonRow>& rows);

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);

}  // namespace hs2::io
