#include "hs2/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace hs2::sampling {
namespace {

InitialData with_speed(const RealFunction& u0x, const RealFunction& rho0, double c) {
  const double c0 = std::sqrt(0.25 * integrate(u0x * u0x + rho0 * rho0));
  const double s = c / c0;
  return InitialData::from_u0x(u0x * s, rho0 * s);
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

int default_modes(PeriodicGrid grid) { return std::max(2, grid.size() / 16); }

RealFunction band_limited(PeriodicGrid grid, Rng& rng, int modes, double mean) {
  std::normal_distribution<double> normal;
  std::vector<double> a(static_cast<std::size_t>(modes)), b(static_cast<std::size_t>(modes));
  for (int k = 0; k < modes; ++k) {
    a[static_cast<std::size_t>(k)] = normal(rng) / (k + 1);
    b[static_cast<std::size_t>(k)] = normal(rng) / (k + 1);
  }
  return RealFunction::sample(grid, [&](double x) {
    double s = mean;
    for (int k = 0; k < modes; ++k) {
      const double w = kTwoPi * (k + 1) * x;
      s += a[static_cast<std::size_t>(k)] * std::cos(w) + b[static_cast<std::size_t>(k)] * std::sin(w);
    }
    return s;
  });
}

TangentVector tangent(PeriodicGrid grid, Rng& rng, int modes) {
  auto u1 = band_limited(grid, rng, modes);
  std::normal_distribution<double> normal;
  auto u2 = band_limited(grid, rng, modes, normal(rng));
  return TangentVector::make(u1 - u1[0], std::move(u2));
}

KTangent k_tangent(PeriodicGrid grid, Rng& rng, int modes) { return KTangent::from(tangent(grid, rng, modes)); }

Diffeo diffeo(PeriodicGrid grid, Rng& rng, double max_stretch, int modes) {
  const auto g = band_limited(grid, rng, modes);
  // Scale the zero-mean density perturbation so phi_x = 1 + g stays positive.
  std::uniform_real_distribution<double> amp(0.2, 1.0);
  const auto scaled = g * (amp(rng) * max_stretch / max_abs(g));
  return Diffeo::from_shift(periodic_antiderivative(scaled));
}

GroupElement element(PeriodicGrid grid, Rng& rng, double angle_amplitude) {
  auto phi = diffeo(grid, rng);
  const auto raw = band_limited(grid, rng, 4, 0.0);
  std::uniform_real_distribution<double> offset(0.0, kFourPi);
  auto alpha = raw * (angle_amplitude / max_abs(raw)) + offset(rng);
  return {std::move(phi), AngleField{std::move(alpha), 0}};
}

InitialData global_data(PeriodicGrid grid, Rng& rng, double c, int modes) {
  auto u0x = band_limited(grid, rng, modes);
  auto wiggle = band_limited(grid, rng, modes);
  std::uniform_real_distribution<double> lift(0.3, 2.0);
  std::bernoulli_distribution flip;
  const double floor_gap = lift(rng);
  // min |rho0| >= floor_gap before rescaling to speed c.
  auto rho0 = wiggle + (max_abs(wiggle) + floor_gap);
  if (flip(rng)) rho0 = -rho0;
  return with_speed(u0x, rho0, c);
}

InitialData finite_data(PeriodicGrid grid, Rng& rng, double c, int modes) {
  auto u0x = band_limited(grid, rng, modes);
  RealFunction rho0 = band_limited(grid, rng, modes);
  // A zero-mean nonzero rho0 changes sign; shifting by a level strictly
  // inside (min, max) keeps a sign change.
  const double lo = min_value(rho0), hi = -min_value(-rho0);
  std::uniform_real_distribution<double> level(0.8 * lo, 0.8 * hi);
  rho0 = rho0 - level(rng);
  return with_speed(u0x, rho0, c);
}

}  // namespace hs2::sampling
