#include "hs2/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hs2::io {
namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  return out;
}

std::vector<std::vector<double>> read_rows(const std::filesystem::path& path, std::size_t columns) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path.string());
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != columns) throw Error(ErrorKind::InvalidArgument, "malformed row in " + path.string());
    rows.push_back(std::move(row));
  }
  return rows;
}

// JSON has no infinity; report it as null.
json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::vector<double> as_vector(const RealFunction& f) { return f.values(); }

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const std::filesystem::path& path, const RealFunction& f) {
  auto out = open_out(path);
  out << "x,value\n";
  for (int j = 0; j < f.size(); ++j) out << format_double(f.grid().node(j)) << ',' << format_double(f[j]) << '\n';
}

void write_csv(const std::filesystem::path& path, const ComplexFunction& f) {
  auto out = open_out(path);
  out << "x,re,im\n";
  for (int j = 0; j < f.size(); ++j) {
    out << format_double(f.grid().node(j)) << ',' << format_double(f[j].real()) << ','
        << format_double(f[j].imag()) << '\n';
  }
}

RealFunction read_real_csv(const std::filesystem::path& path) {
  const auto rows = read_rows(path, 2);
  std::vector<double> v;
  for (const auto& r : rows) v.push_back(r[1]);
  const PeriodicGrid grid(static_cast<int>(v.size()));
  return RealFunction(grid, std::move(v));
}

ComplexFunction read_complex_csv(const std::filesystem::path& path) {
  const auto rows = read_rows(path, 3);
  std::vector<cplx> v;
  for (const auto& r : rows) v.emplace_back(r[1], r[2]);
  const PeriodicGrid grid(static_cast<int>(v.size()));
  return ComplexFunction(grid, std::move(v));
}

void write_trajectory_csv(const std::filesystem::path& path, const std::vector<double>& times,
                          const std::vector<TangentVector>& states) {
  auto out = open_out(path);
  out << "t,x,u,rho\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    const auto& s = states[i];
    for (int j = 0; j < s.u1.size(); ++j) {
      out << format_double(times[i]) << ',' << format_double(s.grid().node(j)) << ',' << format_double(s.u1[j])
          << ',' << format_double(s.u2[j]) << '\n';
    }
  }
}

json to_json(const GroupElement& a) {
  return json{{"n", a.grid().size()},
              {"phi", as_vector(a.phi.lift())},
              {"alpha", as_vector(a.alpha.lift())},
              {"winding", a.alpha.winding}};
}

GroupElement group_element_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto phi = j.at("phi").get<std::vector<double>>();
    const auto alpha = j.at("alpha").get<std::vector<double>>();
    const int winding = j.at("winding").get<int>();
    const PeriodicGrid grid(n);
    if (static_cast<int>(alpha.size()) != n) throw Error(ErrorKind::InvalidArgument, "alpha length mismatch");
    std::vector<double> periodic(alpha.size());
    for (int k = 0; k < n; ++k) {
      periodic[static_cast<std::size_t>(k)] = alpha[static_cast<std::size_t>(k)] - kFourPi * winding * grid.node(k);
    }
    return {Diffeo::from_lift(grid, phi), AngleField{RealFunction(grid, std::move(periodic)), winding}};
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed group element: ") + e.what());
  }
}

json to_json(const BlowupReport& r) {
  json w = json::array();
  for (const auto& p : r.witnesses) w.push_back({{"x", p.x}, {"t", p.t}});
  return json{{"schema_version", kReportSchemaVersion},
              {"finite", r.finite},
              {"speed", r.speed},
              {"T_physical", number_or_null(r.T)},
              {"T_unit_speed", number_or_null(r.unit_speed_T())},
              {"witnesses", w}};
}

json to_json(const VerifyReport& r) {
  json results = json::array();
  for (const auto& x : r.results) {
    results.push_back({{"identity", x.identity},
                       {"n_samples", x.n_samples},
                       {"max_residual", number_or_null(x.max_residual)},
                       {"tolerance", x.tolerance},
                       {"pass", x.pass}});
  }
  return json{{"schema_version", r.schema_version},
              {"n", r.n},
              {"seed", r.seed},
              {"all_pass", r.all_pass()},
              {"results", results}};
}

json to_json(const LogResult& r) {
  return json{{"schema_version", kReportSchemaVersion},
              {"kind", to_string(r.kind)},
              {"r0", r.r0},
              {"period", r.period},
              {"u0", as_vector(r.direction.u1)},
              {"rho0", as_vector(r.direction.u2)}};
}

json to_json(const std::vector<ComparisonRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back({{"t", r.t}, {"rel_l2_u", r.rel_l2_u}, {"rel_l2_rho", r.rel_l2_rho}});
  return a;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

}  // namespace hs2::io
