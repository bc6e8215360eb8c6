#include "hs2/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "CLI11.hpp"

#include "hs2/config.hpp"
#include "hs2/io.hpp"

namespace hs2::cli {
namespace {

struct Inputs {
  std::string config_path;
  std::map<std::string, std::string> flags;
  std::vector<std::string> tolerances;  // name=value
  std::string target_path, a_path, b_path;
};

std::string dashed(std::string k) {
  std::replace(k.begin(), k.end(), '_', '-');
  return k;
}

void add_common(CLI::App* sub, Inputs& in) {
  sub->add_option("-c,--config", in.config_path, "key=value configuration file");
  for (const auto& key : config_keys()) sub->add_option("--" + dashed(key), in.flags[key]);
  sub->add_option("--tol", in.tolerances, "verification tolerance override, identity=value");
}

RunConfig resolve(const Inputs& in, const CLI::App& sub) {
  KeyValues kv;
  if (!in.config_path.empty()) kv = read_config_file(in.config_path);
  for (const auto& key : config_keys()) {
    if (sub.count("--" + dashed(key)) > 0) kv[key] = in.flags.at(key);
  }
  for (const auto& t : in.tolerances) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ConfigError, "--tol expects identity=value, got " + t);
    kv["tol." + t.substr(0, eq)] = t.substr(eq + 1);
  }
  auto cfg = build_config(kv);
  const auto names = identity_names();
  for (const auto& [name, value] : cfg.tolerances) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw Error(ErrorKind::ConfigError, "unknown identity in tolerance override: " + name);
    }
  }
  if (!cfg.fault.empty() && std::find(names.begin(), names.end(), cfg.fault) == names.end()) {
    throw Error(ErrorKind::ConfigError, "unknown identity for fault injection: " + cfg.fault);
  }
  return cfg;
}

double relative_l2(const RealFunction& reference, const RealFunction& other) {
  const double denom = l2_norm(reference);
  const double diff = l2_norm(reference - other);
  return denom > 1e-12 ? diff / denom : diff;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto data = cfg.initial_data();
  const ExactSolver exact(data);
  const auto& report = exact.blowup();
  if (report.finite && report.T <= cfg.t_end + ExactSolver::kSafetyMargin) {
    const auto j = io::to_json(report);
    io::write_json(cfg.output_dir / "blowup.json", j);
    err << "solution blows up at T = " << io::format_double(report.T) << " before t_end = " << cfg.t_end << '\n';
    out << j.dump(2) << '\n';
    return kBeyondBlowup;
  }

  const auto traj = integrate(data, cfg.integrator());
  std::vector<TangentVector> exact_states;
  std::vector<io::ComparisonRow> rows;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    exact_states.push_back(exact.solution(traj.times[i]));
    rows.push_back({traj.times[i], relative_l2(exact_states.back().u1, traj.states[i].u1),
                    relative_l2(exact_states.back().u2, traj.states[i].u2)});
  }
  io::write_trajectory_csv(cfg.output_dir / "exact_trajectory.csv", traj.times, exact_states);
  io::write_trajectory_csv(cfg.output_dir / "reference_trajectory.csv", traj.times, traj.states);
  io::write_json(cfg.output_dir / "comparison.json", io::to_json(rows));

  double worst = 0.0;
  for (const auto& r : rows) worst = std::max({worst, r.rel_l2_u, r.rel_l2_rho});
  out << "solve: " << rows.size() << " records, max relative L2 difference " << io::format_double(worst)
      << ", outputs in " << cfg.output_dir.string() << '\n';
  return kOk;
}

int cmd_blowup(const RunConfig& cfg, std::ostream& out) {
  const auto report = blowup_time(cfg.initial_data());
  const auto j = io::to_json(report);
  io::write_json(cfg.output_dir / "blowup.json", j);
  out << j.dump(2) << '\n';
  return report.finite ? kFiniteBlowup : kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto report = run_verification(cfg.verify());
  const auto j = io::to_json(report);
  io::write_json(cfg.output_dir / "verify_report.json", j);
  for (const auto& r : report.results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.identity << " max_residual=" << io::format_double(r.max_residual)
        << " tolerance=" << io::format_double(r.tolerance) << '\n';
  }
  return report.all_pass() ? kOk : kVerifyFailed;
}

GroupElement load_or_geodesic(const std::string& path, const RunConfig& cfg) {
  if (!path.empty()) return io::group_element_from_json(io::read_json(path));
  return exact_geodesic(cfg.initial_data(), cfg.time);
}

int cmd_logmap(const RunConfig& cfg, const Inputs& in, std::ostream& out) {
  const auto target = load_or_geodesic(in.target_path, cfg);
  const auto j = io::to_json(log_map(target));
  io::write_json(cfg.output_dir / "logmap.json", j);
  out << "kind=" << j["kind"].get<std::string>() << " r0=" << io::format_double(j["r0"].get<double>()) << '\n';
  return kOk;
}

int cmd_connect(const RunConfig& cfg, const Inputs& in, std::ostream& out) {
  const auto a = load_or_geodesic(in.a_path, cfg);
  const auto b = in.b_path.empty() ? GroupElement::identity(a.grid())
                                   : io::group_element_from_json(io::read_json(in.b_path));
  const io::json j{{"schema_version", kReportSchemaVersion}, {"classification", to_string(connect(a, b))}};
  io::write_json(cfg.output_dir / "connect.json", j);
  out << j["classification"].get<std::string>() << '\n';
  return kOk;
}

int cmd_geodesic(const RunConfig& cfg, std::ostream& out) {
  const auto g = exact_geodesic(cfg.initial_data(), cfg.time);
  const auto path = cfg.output_dir / "geodesic.json";
  io::write_json(path, io::to_json(g));
  out << path.string() << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and reference solvers for the two-component Hunter-Saxton system", "hs2"};
  app.require_subcommand(1);
  Inputs in;

  auto* solve = app.add_subcommand("solve", "exact vs. RK4 reference trajectories and comparison");
  auto* blowup = app.add_subcommand("blowup", "blow-up time report (exit 10 if finite)");
  auto* verify = app.add_subcommand("verify", "randomised identity suite (exit 1 on failure)");
  auto* logmap = app.add_subcommand("logmap", "initial velocity of the geodesic from the identity to a target");
  auto* conn = app.add_subcommand("connect", "classify geodesics joining two group elements");
  auto* geo = app.add_subcommand("geodesic", "export the exact geodesic at a given time as JSON");
  for (auto* sub : {solve, blowup, verify, logmap, conn, geo}) add_common(sub, in);
  logmap->add_option("--target", in.target_path, "group element JSON (default: exact geodesic at --time)");
  conn->add_option("--a", in.a_path, "first group element JSON (default: exact geodesic at --time)");
  conn->add_option("--b", in.b_path, "second group element JSON (default: identity)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  CLI::App* active = app.get_subcommands().front();
  RunConfig cfg;
  try {
    cfg = resolve(in, *active);
    // Malformed initial data is a configuration problem too.
    if (active != verify) (void)cfg.initial_data();
  } catch (const Error& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (active == verify) return cmd_verify(cfg, out);
    if (active == solve) return cmd_solve(cfg, out, err);
    if (active == blowup) return cmd_blowup(cfg, out);
    if (active == logmap) return cmd_logmap(cfg, in, out);
    if (active == conn) return cmd_connect(cfg, in, out);
    return cmd_geodesic(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::BeyondBlowup) return kBeyondBlowup;
    if (e.kind() == ErrorKind::ConfigError) return kConfigError;
    return kRuntimeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

}  // namespace hs2::cli
