#include "hs2/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hs2/kernels.hpp"
#include "hs2/spectral.hpp"

namespace hs2 {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroNode = 1e-12;
constexpr double kTangentialZero = 1e-10;

// Real trigonometric interpolant with cheap point evaluation.
class Interpolant {
 public:
  explicit Interpolant(const RealFunction& f) : c_(spectral::forward(std::span<const double>(f.values()))) {}

  double operator()(double x) const { return kernels::detail::trig_point({c_}, x).real(); }
  double slope(double x) const {
    cplx v, d;
    kernels::detail::trig_point_with_derivative({c_}, x, v, d);
    return d.real();
  }

 private:
  std::vector<cplx> c_;
};

// Bisection for a sign change of g on [lo, hi]; g(lo) and g(hi) have
// opposite signs on entry.
template <typename G>
double bisect(G&& g, double lo, double hi, double g_lo) {
  for (int i = 0; i < 100 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool opposite(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

double wrap_unit(double x) { return x - std::floor(x); }

// First positive zero of cos(ct) + a sin(ct): ct = arccot(-a) in (0, pi).
double first_zero_time(double a, double c) { return (0.5 * kPi + std::atan(a)) / c; }

// All x where rho0 vanishes, found on the interpolant of the samples.
std::vector<double> rho_roots(const RealFunction& rho0, const RealFunction& u0x) {
  const auto& g = rho0.grid();
  const int n = g.size();
  const double h = g.spacing();
  const Interpolant rho(rho0);
  const auto rho_x = derivative(rho0);
  const Interpolant drho(rho_x);
  std::vector<double> roots;

  auto zero = [&](int j) { return std::abs(rho0[(j % n + n) % n]) < kZeroNode; };
  auto val = [&](int j) { return rho0[(j % n + n) % n]; };

  for (int j = 0; j < n; ++j) {
    if (zero(j)) {
      roots.push_back(g.node(j));
      continue;
    }
    // Transversal crossing between j and j+1.
    if (!zero(j + 1) && opposite(val(j), val(j + 1))) {
      const double x0 = g.node(j);
      roots.push_back(wrap_unit(bisect(rho, x0, x0 + h, val(j))));
    }
    // Tangential touch: local minimum of |rho| on the grid without a sign change.
    const double a = val(j - 1), b = val(j), c = val(j + 1);
    if (!zero(j - 1) && !zero(j + 1) && !opposite(a, b) && !opposite(b, c) && std::abs(b) < std::abs(a) &&
        std::abs(b) <= std::abs(c)) {
      const double xm = g.node(j);
      const double dl = drho(xm - h), dm = rho_x[j], dr = drho(xm + h);
      double xc = xm;
      if (opposite(dl, dm)) xc = bisect(drho, xm - h, xm, dl);
      else if (opposite(dm, dr)) xc = bisect(drho, xm, xm + h, dm);
      if (std::abs(rho(xc)) < kTangentialZero) roots.push_back(wrap_unit(xc));
    }
  }

  // Inside runs of vanishing rho0 the earliest blow-up sits at a minimum of
  // u0x, which need not be a node.
  const auto u0xx = derivative(u0x);
  const Interpolant du0x(u0xx);
  for (int j = 0; j < n; ++j) {
    if (!zero(j) || !zero(j + 1)) continue;
    const double l = u0xx[j], r = u0xx[(j + 1) % n];
    if (l < 0.0 && r > 0.0) {
      const double xc = bisect(du0x, g.node(j), g.node(j) + h, l);
      if (std::abs(rho(xc)) < kTangentialZero) roots.push_back(wrap_unit(xc));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

InitialData InitialData::make(RealFunction u0, RealFunction rho0) {
  auto t = TangentVector::make(std::move(u0), std::move(rho0));
  return {std::move(t.u1), std::move(t.u2)};
}

InitialData InitialData::from_u0x(const RealFunction& u0x, RealFunction rho0) {
  const double m = integrate(u0x);
  if (std::abs(m) > 1e-10) {
    throw Error(ErrorKind::NonZeroMean, "u0x must have zero mean, got " + std::to_string(m));
  }
  return {periodic_antiderivative(u0x), std::move(rho0)};
}

ExactSolver::ExactSolver(const InitialData& d) : data_(d), c_(0.0), a_(d.grid()), b_(d.grid()) {
  const auto u0x = derivative(d.u0);
  const double c2 = 0.25 * integrate(u0x * u0x + d.rho0 * d.rho0);
  if (c2 < 1e-14) throw Error(ErrorKind::ZeroData, "initial data has zero energy");
  c_ = std::sqrt(c2);
  a_ = u0x * (0.5 / c_);
  b_ = d.rho0 * (0.5 / c_);

  report_.speed = c_;
  const Interpolant u0x_at(u0x);
  for (double x : rho_roots(d.rho0, u0x)) {
    report_.witnesses.push_back({x, first_zero_time(u0x_at(x) / (2.0 * c_), c_)});
  }
  if (!report_.witnesses.empty()) {
    report_.finite = true;
    report_.T = std::min_element(report_.witnesses.begin(), report_.witnesses.end(),
                                 [](const BlowupWitness& p, const BlowupWitness& q) { return p.t < q.t; })
                    ->t;
  }
}

void ExactSolver::require_before_blowup(double t) const {
  if (t < 0.0) throw Error(ErrorKind::InvalidArgument, "time must be nonnegative");
  if (report_.finite && t >= report_.T - kSafetyMargin) {
    throw Error(ErrorKind::BeyondBlowup,
                "t = " + std::to_string(t) + " is not before the blow-up time T = " + std::to_string(report_.T));
  }
}

ComplexFunction ExactSolver::sphere_curve(double t) const {
  const double s = std::sin(c_ * t), co = std::cos(c_ * t);
  return to_complex(a_ * s + co, b_ * s);
}

GroupElement ExactSolver::geodesic(double t) const {
  require_before_blowup(t);
  const double theta = c_ * t;
  const double s = std::sin(theta), co = std::cos(theta);
  const auto re = a_ * s + co;
  const auto im = b_ * s;
  auto phi = Diffeo::from_shift(periodic_antiderivative(re * re + im * im));

  // arg f continued in t: each half turn of theta adds pi sgn(b), since
  // f(theta + pi) = -f(theta) and Im f keeps the sign of b in between.
  const double m = std::floor(theta / kPi);
  const double tp = theta - m * kPi;
  const double sp = std::sin(tp), cp = std::cos(tp);
  std::vector<double> alpha(static_cast<std::size_t>(a_.size()));
  for (int j = 0; j < a_.size(); ++j) {
    const double b = b_[j];
    const double sgn = b > 0.0 ? 1.0 : (b < 0.0 ? -1.0 : 0.0);
    alpha[static_cast<std::size_t>(j)] = 2.0 * (m * kPi * sgn + std::atan2(b * sp, cp + a_[j] * sp));
  }
  return {std::move(phi), AngleField{RealFunction(a_.grid(), std::move(alpha)), 0}};
}

TangentVector ExactSolver::solution(double t) const {
  const auto g = geodesic(t);
  const auto f = sphere_curve(t);
  const double theta = c_ * t;
  const double s = std::sin(theta), co = std::cos(theta);
  const auto ft = to_complex(a_ * co - s, b_ * co) * cplx(c_);
  const auto w = ft / f * cplx(2.0);
  const auto phi_t = periodic_antiderivative(real_part(ft * conjugate(f)) * 2.0);
  const auto inv = invert_diffeo(g.phi);
  return TangentVector::make(compose(phi_t, inv), compose(imag_part(w), inv));
}

double speed(const InitialData& d) { return ExactSolver(d).speed(); }
GroupElement exact_geodesic(const InitialData& d, double t) { return ExactSolver(d).geodesic(t); }
TangentVector exact_solution(const InitialData& d, double t) { return ExactSolver(d).solution(t); }
BlowupReport blowup_time(const InitialData& d) { return ExactSolver(d).blowup(); }

ExistenceReport classify_existence(const InitialData& d) {
  const auto r = blowup_time(d);
  if (!r.finite) {
    const double inf = std::numeric_limits<double>::infinity();
    return {Existence::Global, inf, inf, true};
  }
  return {Existence::Finite, r.T, r.unit_speed_T(), r.unit_speed_T() < kPi};
}

InitialData LogResult::scaled(double r) const { return {direction.u1 * r, direction.u2 * r}; }

LogResult log_map(const GroupElement& target, double phase_tolerance) {
  const auto grid = target.grid();
  const auto f = phi_map(target);
  const ComplexFunction one(grid, cplx(1.0));
  if (l2_norm(f.values() - one) <= 1e-8 || l2_norm(f.values() + one) <= 1e-8) {
    throw Error(ErrorKind::AtIdentityOrAntipode, "target is the identity or (id, 2 pi)");
  }

  const auto z = half_phase(target.alpha);
  const auto root = target.phi.phi_x().map([](double v) { return std::sqrt(v); });
  const auto cosine = real_part(z), sine = imag_part(z);
  const double mu = integrate(root * cosine);
  const double norm = std::sqrt(1.0 - mu * mu);

  auto u0 = antiderivative_from_zero(root * cosine - mu) * (2.0 / norm);
  auto rho0 = root * sine * (2.0 / norm);

  // e^{i alpha/2} = -1 blocks every geodesic; = +1 blocks all but the
  // short one. Sign flips of sin(alpha/2) between nodes count as hits.
  bool minus_one = false, plus_one = false;
  const int n = grid.size();
  for (int j = 0; j < n; ++j) {
    if (std::abs(z[j] + 1.0) < phase_tolerance) minus_one = true;
    if (std::abs(z[j] - 1.0) < phase_tolerance) plus_one = true;
    const int k = (j + 1) % n;
    if (opposite(sine[j], sine[k])) {
      const double s = sine[j] / (sine[j] - sine[k]);
      const double cr = cosine[j] + s * (cosine[k] - cosine[j]);
      (cr < 0.0 ? minus_one : plus_one) = true;
    }
  }
  const LogKind kind = minus_one ? LogKind::Empty : (plus_one ? LogKind::Unique : LogKind::PeriodicFamily);
  return {kind, std::acos(mu), TangentVector::make(std::move(u0), std::move(rho0)),
          kind == LogKind::PeriodicFamily ? 2.0 * kPi : 0.0};
}

const char* to_string(Connection c) noexcept {
  switch (c) {
    case Connection::Identical: return "identical";
    case Connection::AntipodalInfinite: return "antipodal_infinite";
    case Connection::UniqueShort: return "unique_short";
    case Connection::PeriodicFamily: return "periodic_family";
    case Connection::None: return "none";
  }
  return "unknown";
}

const char* to_string(LogKind k) noexcept {
  switch (k) {
    case LogKind::Empty: return "empty";
    case LogKind::Unique: return "unique";
    case LogKind::PeriodicFamily: return "periodic_family";
  }
  return "unknown";
}

Connection connect(const GroupElement& a, const GroupElement& b) {
  const auto rel = multiply(a, inverse(b));
  const auto f = phi_map(rel);
  const ComplexFunction one(a.grid(), cplx(1.0));
  if (l2_norm(f.values() - one) <= 1e-8) return Connection::Identical;
  if (l2_norm(f.values() + one) <= 1e-8) return Connection::AntipodalInfinite;
  switch (log_map(rel).kind) {
    case LogKind::Empty: return Connection::None;
    case LogKind::Unique: return Connection::UniqueShort;
    case LogKind::PeriodicFamily: return Connection::PeriodicFamily;
  }
  return Connection::None;
}

}  // namespace hs2
