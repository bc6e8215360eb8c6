#include "hs2/integrator.hpp"

#include <cmath>
#include <string>

namespace hs2 {
namespace {

RealFunction product(const RealFunction& a, const RealFunction& b, bool dealias_on) {
  return dealias_on ? dealiased_product(a, b) : a * b;
}

TangentVector rhs_impl(const RealFunction& u, const RealFunction& rho, bool dealias_on) {
  const auto ux = derivative(u);
  const auto transport = product(u, ux, dealias_on);
  const auto source = product(ux, ux, dealias_on) + product(rho, rho, dealias_on);
  auto ut = -transport - inverse_A_derivative(source) * 0.5;
  // (u u_x)(0) = 0 analytically; truncating the product leaves a tiny residue.
  ut = ut - ut[0];
  auto rhot = -derivative(product(rho, u, dealias_on));
  return {std::move(ut), std::move(rhot)};
}

StepLog measure(double t, const TangentVector& s, bool restricted) {
  return {t, energy(s, restricted), integrate(s.u2), max_abs(derivative(s.u1))};
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(dt > 0.0)) throw Error(ErrorKind::InvalidArgument, "dt must be positive");
  if (!(t_end > 0.0)) throw Error(ErrorKind::InvalidArgument, "t_end must be positive");
  if (record_every < 1) throw Error(ErrorKind::InvalidArgument, "record_every must be at least 1");
  if (!(blowup_threshold > 0.0)) throw Error(ErrorKind::InvalidArgument, "blowup_threshold must be positive");
}

TangentVector rhs(const TangentVector& state, bool dealias_on) { return rhs_impl(state.u1, state.u2, dealias_on); }

TangentVector rhs_restricted(const TangentVector& state, bool dealias_on) {
  auto r = rhs_impl(state.u1, mean_projection(state.u2), dealias_on);
  r.u2 = mean_projection(r.u2);
  return r;
}

double energy(const TangentVector& s, bool restricted) {
  const auto ux = derivative(s.u1);
  const auto rho = restricted ? mean_projection(s.u2) : s.u2;
  return 0.25 * integrate(ux * ux + rho * rho);
}

Trajectory integrate(const InitialData& d, const IntegratorConfig& cfg) {
  cfg.validate();
  const bool restricted = cfg.restricted;
  auto f = [&](const TangentVector& s) { return restricted ? rhs_restricted(s, cfg.dealias) : rhs(s, cfg.dealias); };
  auto project = [&](TangentVector s) {
    if (restricted) s.u2 = mean_projection(s.u2);
    return s;
  };

  TangentVector y{d.u0 - d.u0[0], d.rho0};
  y = project(std::move(y));

  const long steps = static_cast<long>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
  const double h = cfg.t_end / static_cast<double>(steps);

  Trajectory out;
  out.times.push_back(0.0);
  out.states.push_back(y);
  out.log.push_back(measure(0.0, y, restricted));

  for (long k = 1; k <= steps; ++k) {
    const auto k1 = f(y);
    const auto k2 = f(project(y + (0.5 * h) * k1));
    const auto k3 = f(project(y + (0.5 * h) * k2));
    const auto k4 = f(project(y + h * k3));
    auto next = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    next.u1 = next.u1 - next.u1[0];
    next = project(std::move(next));

    const double t = static_cast<double>(k) * h;
    const auto entry = measure(t, next, restricted);
    if (!std::isfinite(entry.sup_ux) || entry.sup_ux > cfg.blowup_threshold) {
      out.halted = true;
      out.log.push_back(entry);
      break;
    }
    y = std::move(next);
    out.last_stable_time = t;
    out.log.push_back(entry);
    if (k % cfg.record_every == 0 || k == steps) {
      out.times.push_back(t);
      out.states.push_back(y);
    }
  }
  return out;
}

}  // namespace hs2
