#pragma once

// Closed-form solutions of the two-component Hunter-Saxton system obtained
// from great circles on the sphere, their blow-up time, and the group-level
// logarithm (boundary-value geodesics).

#include <limits>
#include <vector>

#include "hs2/group.hpp"

namespace hs2 {

struct InitialData {
  RealFunction u0;
  RealFunction rho0;

  /// Pins u0(0) = 0 (InvalidArgument if it is far off).
  static InitialData make(RealFunction u0, RealFunction rho0);
  /// u0 = int_0^x u0x; u0x must have zero mean.
  static InitialData from_u0x(const RealFunction& u0x, RealFunction rho0);

  PeriodicGrid grid() const noexcept { return u0.grid(); }
  TangentVector as_tangent() const { return {u0, rho0}; }
};

struct BlowupWitness {
  double x;
  double t;
};

struct BlowupReport {
  bool finite = false;
  double T = std::numeric_limits<double>::infinity();
  double speed = 0.0;
  std::vector<BlowupWitness> witnesses;

  /// Blow-up time measured in arc length, c * T.
  double unit_speed_T() const { return speed * T; }
};

/// Precomputes c, u0x/(2c), rho0/(2c) and the blow-up analysis once so that
/// repeated evaluations at many times stay cheap.
class ExactSolver {
 public:
  /// Evaluations closer than this to the blow-up time are refused.
  static constexpr double kSafetyMargin = 1e-9;

  explicit ExactSolver(const InitialData& d);

  double speed() const noexcept { return c_; }
  const BlowupReport& blowup() const noexcept { return report_; }
  const InitialData& data() const noexcept { return data_; }

  /// f(t) = cos ct + (u0x + i rho0) sin ct / (2c).
  ComplexFunction sphere_curve(double t) const;
  GroupElement geodesic(double t) const;
  /// (u, rho) at time t.
  TangentVector solution(double t) const;

 private:
  void require_before_blowup(double t) const;

  InitialData data_;
  double c_;
  RealFunction a_;  // u0x / 2c
  RealFunction b_;  // rho0 / 2c
  BlowupReport report_;
};

double speed(const InitialData& d);
GroupElement exact_geodesic(const InitialData& d, double t);
TangentVector exact_solution(const InitialData& d, double t);
BlowupReport blowup_time(const InitialData& d);

enum class Existence { Global, Finite };

struct ExistenceReport {
  Existence kind;
  double T_physical;
  double T_unit_speed;
  /// c * T < pi, vacuous for global solutions.
  bool bound_holds;
};

ExistenceReport classify_existence(const InitialData& d);

enum class LogKind { Empty, Unique, PeriodicFamily };

struct LogResult {
  LogKind kind;
  /// Principal value r0 in (0, pi); for a periodic family the full set is
  /// {(r0 + 2 pi k) direction : k in Z}.
  double r0 = 0.0;
  /// Unit initial velocity (u0, rho0) at the identity.
  TangentVector direction;
  /// 2 pi when kind == PeriodicFamily, 0 otherwise.
  double period = 0.0;

  InitialData scaled(double r) const;
};

LogResult log_map(const GroupElement& target, double phase_tolerance = 1e-10);

enum class Connection { Identical, AntipodalInfinite, UniqueShort, PeriodicFamily, None };

const char* to_string(Connection c) noexcept;
const char* to_string(LogKind k) noexcept;

Connection connect(const GroupElement& a, const GroupElement& b);

}  // namespace hs2
