#pragma once
// Glue between closed-form test data and hs2 types, plus quadratures written
// out longhand so tests do not grade the library with its own formulas.

#include <cmath>
#include <random>

#include "hs2/geodesics.hpp"
#include "hs2/geometry.hpp"
#include "hs2/group.hpp"
#include "oracles.hpp"

namespace support {

using hs2::cplx;

inline hs2::RealFunction sampled(hs2::PeriodicGrid grid, const oracle::Trig& t) {
  return hs2::RealFunction(grid, t.sample(grid.size()));
}

/// Initial data with u0 = int_0^x u0x (u0x must have zero mean).
inline hs2::InitialData data(hs2::PeriodicGrid grid, const oracle::Trig& u0x, const oracle::Trig& rho0) {
  auto u0 = hs2::RealFunction::sample(grid, [&](double x) { return u0x.periodic_integral(x); });
  return hs2::InitialData::make(std::move(u0), sampled(grid, rho0));
}

/// A group element in closed form: phi_x = 1 + stretch, alpha = angle.
struct AnalyticElement {
  oracle::Trig stretch;  // zero mean, |stretch| < 1
  oracle::Trig angle;

  cplx sphere(double x) const { return std::sqrt(1.0 + stretch(x)) * std::polar(1.0, 0.5 * angle(x)); }

  hs2::GroupElement to_group(hs2::PeriodicGrid grid) const {
    auto shift = hs2::RealFunction::sample(grid, [&](double x) { return stretch.periodic_integral(x); });
    return {hs2::Diffeo::from_shift(std::move(shift)), hs2::AngleField{sampled(grid, angle), 0}};
  }

  static AnalyticElement random(std::mt19937_64& rng, double angle_amplitude) {
    std::uniform_real_distribution<double> stretch_amp(0.1, 0.5), offset(0.0, 4.0 * oracle::kPi);
    AnalyticElement e;
    e.stretch = oracle::Trig::random(rng, 3);
    e.stretch = e.stretch.scaled(stretch_amp(rng) / e.stretch.amplitude());
    e.angle = oracle::Trig::random(rng, 3);
    e.angle = e.angle.scaled(angle_amplitude / e.angle.amplitude());
    e.angle.mean = offset(rng);
    return e;
  }
};

inline double mean(const hs2::RealFunction& f) {
  double s = 0.0;
  for (double v : f.values()) s += v;
  return s / f.size();
}

inline double max_abs_diff(const hs2::RealFunction& a, const hs2::RealFunction& b) {
  double m = 0.0;
  for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

inline double max_abs_diff(const hs2::ComplexFunction& a, const hs2::ComplexFunction& b) {
  double m = 0.0;
  for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

/// Re (1/n) sum X conj(Y).
inline double l2(const hs2::ComplexFunction& x, const hs2::ComplexFunction& y) {
  double s = 0.0;
  for (int j = 0; j < x.size(); ++j) s += x[j].real() * y[j].real() + x[j].imag() * y[j].imag();
  return s / x.size();
}

/// ||a - b||_2 / ||a||_2 on grid samples.
inline double relative_l2(const hs2::RealFunction& a, const hs2::RealFunction& b) {
  double num = 0.0, den = 0.0;
  for (int j = 0; j < a.size(); ++j) {
    num += (a[j] - b[j]) * (a[j] - b[j]);
    den += a[j] * a[j];
  }
  return std::sqrt(num / den);
}

/// 1/4 int (U1x V1x / phi_x + U2 V2 phi_x).
inline double g_metric(const hs2::RealFunction& phi_x, const hs2::TangentVector& u, const hs2::TangentVector& v) {
  const auto ux = hs2::derivative(u.u1), vx = hs2::derivative(v.u1);
  double s = 0.0;
  for (int j = 0; j < ux.size(); ++j) s += ux[j] * vx[j] / phi_x[j] + u.u2[j] * v.u2[j] * phi_x[j];
  return 0.25 * s / ux.size();
}

/// K metric at base phi: the G metric after removing int U2 phi_x from U2.
inline double k_metric(const hs2::RealFunction& phi_x, const hs2::KTangent& u, const hs2::KTangent& v) {
  auto project = [&](const hs2::RealFunction& w) { return w - mean(w * phi_x); };
  return g_metric(phi_x, {u.u1, project(u.u2)}, {v.u1, project(v.u2)});
}

inline double k_metric(const hs2::KTangent& u, const hs2::KTangent& v) {
  return k_metric(hs2::RealFunction(u.grid(), 1.0), u, v);
}

/// 1/4 int (U2x V1 - V2x U1).
inline double omega(const hs2::KTangent& u, const hs2::KTangent& v) {
  const auto u2x = hs2::derivative(u.u2), v2x = hs2::derivative(v.u2);
  double s = 0.0;
  for (int j = 0; j < u2x.size(); ++j) s += u2x[j] * v.u1[j] - v2x[j] * u.u1[j];
  return 0.25 * s / u2x.size();
}

inline double k_norm(const hs2::KTangent& u) { return std::sqrt(k_metric(u, u)); }

}  // namespace support
