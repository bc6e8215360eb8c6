#pragma once

// Reproducible random test objects. Every draw is keyed by (seed, stream,
// index) so parallel batches give the same values as serial ones.

#include <cstdint>
#include <random>

#include "hs2/geodesics.hpp"
#include "hs2/geometry.hpp"

namespace hs2::sampling {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Default band limit for random vectors: n/16 modes, so that the triple
/// products in the curvature expressions stay far below Nyquist.
int default_modes(PeriodicGrid grid);

/// sum_{k=1}^{modes} (a_k cos 2 pi k x + b_k sin 2 pi k x) / k with standard
/// normal a_k, b_k, plus `mean`.
RealFunction band_limited(PeriodicGrid grid, Rng& rng, int modes, double mean = 0.0);

TangentVector tangent(PeriodicGrid grid, Rng& rng, int modes);
KTangent k_tangent(PeriodicGrid grid, Rng& rng, int modes);

/// phi_x stays within [1 - max_stretch, 1 + max_stretch].
Diffeo diffeo(PeriodicGrid grid, Rng& rng, double max_stretch = 0.6, int modes = 4);
GroupElement element(PeriodicGrid grid, Rng& rng, double angle_amplitude = 2.0);

/// Initial data with the given speed c and rho0 bounded away from zero.
InitialData global_data(PeriodicGrid grid, Rng& rng, double c, int modes = 4);
/// Initial data with the given speed whose rho0 changes sign.
InitialData finite_data(PeriodicGrid grid, Rng& rng, double c, int modes = 4);

}  // namespace hs2::sampling
