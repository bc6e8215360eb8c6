#include "hs2/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hs2 {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::ConfigError, msg); }

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size() || !std::isfinite(d)) fail(key + ": not a finite number: " + v);
    return d;
  } catch (const std::logic_error&) {
    fail(key + ": not a number: " + v);
  }
}

long long to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long long i = std::stoll(v, &pos);
    if (pos != v.size()) fail(key + ": not an integer: " + v);
    return i;
  } catch (const std::logic_error&) {
    fail(key + ": not an integer: " + v);
  }
}

bool to_bool(const std::string& key, std::string v) {
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  fail(key + ": not a boolean: " + v);
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(to_double(key, item));
  }
  return out;
}

std::string normalize_key(std::string k) {
  std::replace(k.begin(), k.end(), '-', '_');
  return k;
}

RealFunction fourier(PeriodicGrid grid, double mean, const std::vector<double>& cosines,
                     const std::vector<double>& sines) {
  return RealFunction::sample(grid, [&](double x) {
    double s = mean;
    for (std::size_t k = 0; k < cosines.size(); ++k) s += cosines[k] * std::cos(kTwoPi * (k + 1) * x);
    for (std::size_t k = 0; k < sines.size(); ++k) s += sines[k] * std::sin(kTwoPi * (k + 1) * x);
    return s;
  });
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "n",       "preset",       "u0x_cos", "u0x_sin",          "rho0_mean", "rho0_cos", "rho0_sin",
      "t_end",   "dt",           "record_every", "dealias", "blowup_threshold", "time",   "output_dir",
      "seed",    "samples",      "fault"};
  return keys;
}

KeyValues parse_config_text(const std::string& text) {
  KeyValues kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("line " + std::to_string(lineno) + ": expected key = value");
    const auto key = normalize_key(trim(line.substr(0, eq)));
    if (key.empty()) fail("line " + std::to_string(lineno) + ": empty key");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

KeyValues read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

RunConfig build_config(const KeyValues& kv) {
  RunConfig c;
  bool custom_series = false;
  for (const auto& [raw_key, v] : kv) {
    const auto key = normalize_key(raw_key);
    if (key.rfind("tol.", 0) == 0) {
      const double t = to_double(key, v);
      if (!(t > 0.0)) fail(key + ": tolerance must be positive");
      c.tolerances[key.substr(4)] = t;
    } else if (key == "n") {
      const auto n = to_int(key, v);
      if (n < 8 || n % 2 != 0 || n > (1 << 24)) fail("n must be an even integer >= 8, got " + v);
      c.n = static_cast<int>(n);
    } else if (key == "preset") {
      if (v != "stationary" && v != "smooth-global" && v != "hs-blowup" && v != "custom") {
        fail("unknown preset '" + v + "' (stationary, smooth-global, hs-blowup, custom)");
      }
      c.preset = v;
    } else if (key == "u0x_cos") { c.u0x_cos = to_list(key, v); custom_series = true;
    } else if (key == "u0x_sin") { c.u0x_sin = to_list(key, v); custom_series = true;
    } else if (key == "rho0_cos") { c.rho0_cos = to_list(key, v); custom_series = true;
    } else if (key == "rho0_sin") { c.rho0_sin = to_list(key, v); custom_series = true;
    } else if (key == "rho0_mean") { c.rho0_mean = to_double(key, v); custom_series = true;
    } else if (key == "t_end") {
      c.t_end = to_double(key, v);
      if (!(c.t_end > 0.0)) fail("t_end must be positive");
    } else if (key == "dt") {
      c.dt = to_double(key, v);
      if (!(c.dt > 0.0)) fail("dt must be positive");
    } else if (key == "record_every") {
      const auto r = to_int(key, v);
      if (r < 1 || r > (1 << 30)) fail("record_every must be a positive integer");
      c.record_every = static_cast<int>(r);
    } else if (key == "dealias") {
      c.dealias = to_bool(key, v);
    } else if (key == "blowup_threshold") {
      c.blowup_threshold = to_double(key, v);
      if (!(c.blowup_threshold > 0.0)) fail("blowup_threshold must be positive");
    } else if (key == "time") {
      c.time = to_double(key, v);
      if (c.time < 0.0) fail("time must be nonnegative");
    } else if (key == "output_dir") {
      if (v.empty()) fail("output_dir must not be empty");
      c.output_dir = v;
    } else if (key == "seed") {
      const auto s = to_int(key, v);
      if (s < 0) fail("seed must be nonnegative");
      c.seed = static_cast<std::uint64_t>(s);
    } else if (key == "samples") {
      const auto s = to_int(key, v);
      if (s < 1 || s > 1000000) fail("samples must be a positive integer");
      c.samples = static_cast<int>(s);
    } else if (key == "fault") {
      c.fault = v;
    } else {
      fail("unknown config key '" + raw_key + "'");
    }
  }
  if (custom_series) {
    if (kv.count("preset") && c.preset != "custom") fail("Fourier coefficients given together with preset " + c.preset);
    c.preset = "custom";
  }
  return c;
}

InitialData RunConfig::initial_data() const {
  const PeriodicGrid grid(n);
  RealFunction u0x(grid), rho0(grid);
  if (preset == "stationary") {
    rho0 = constant(grid, 2.0);
  } else if (preset == "smooth-global") {
    u0x = fourier(grid, 0.0, {}, {1.0});
    rho0 = fourier(grid, 1.5, {1.0}, {});
  } else if (preset == "hs-blowup") {
    u0x = fourier(grid, 0.0, {1.0}, {});
  } else {
    u0x = fourier(grid, 0.0, u0x_cos, u0x_sin);
    rho0 = fourier(grid, rho0_mean, rho0_cos, rho0_sin);
  }
  return InitialData::from_u0x(u0x, rho0);
}

IntegratorConfig RunConfig::integrator() const {
  IntegratorConfig ic;
  ic.dt = dt;
  ic.t_end = t_end;
  ic.dealias = dealias;
  ic.record_every = record_every;
  ic.blowup_threshold = blowup_threshold;
  return ic;
}

VerifyOptions RunConfig::verify() const {
  VerifyOptions v;
  v.n = n;
  v.seed = seed;
  v.samples = samples;
  v.tolerances = tolerances;
  v.fault = fault;
  return v;
}

}  // namespace hs2
