#pragma once

// Circle diffeomorphisms fixing 0, stored as the periodic shift h = phi - x,
// and angle fields stored as a periodic part plus an integer winding.

#include <span>

#include "hs2/funcspace.hpp"

namespace hs2 {

class Diffeo {
 public:
  /// Minimum admissible phi_x on the grid.
  static constexpr double kMonotoneTolerance = 1e-12;

  static Diffeo identity(PeriodicGrid grid);
  /// phi(x) = x + shift(x). Throws NotMonotone unless phi is strictly
  /// increasing and InvalidArgument unless phi(0) = 0.
  static Diffeo from_shift(RealFunction shift);
  /// From samples of the lift phi(x_j) in [0, 1).
  static Diffeo from_lift(PeriodicGrid grid, std::span<const double> lift);

  PeriodicGrid grid() const noexcept { return shift_.grid(); }
  const RealFunction& shift() const noexcept { return shift_; }
  const RealFunction& phi_x() const noexcept { return phi_x_; }
  RealFunction lift() const;

 private:
  Diffeo(RealFunction shift, RealFunction phi_x) : shift_(std::move(shift)), phi_x_(std::move(phi_x)) {}

  RealFunction shift_;
  RealFunction phi_x_;
};

/// f o phi via the trigonometric interpolant of f; exact at nodes where
/// phi lands on a node.
RealFunction compose(const RealFunction& f, const Diffeo& phi);
ComplexFunction compose(const ComplexFunction& f, const Diffeo& phi);
/// phi o psi.
Diffeo compose(const Diffeo& phi, const Diffeo& psi);

Diffeo invert_diffeo(const Diffeo& phi);

/// alpha(x) = periodic(x) + 4 pi winding x; only alpha mod 4 pi is
/// geometric, the lift keeps the branch continuous.
struct AngleField {
  RealFunction periodic;
  int winding = 0;

  static AngleField zero(PeriodicGrid grid) { return {RealFunction(grid), 0}; }
  static AngleField constant(PeriodicGrid grid, double value) { return {RealFunction(grid, value), 0}; }

  RealFunction lift() const;
  PeriodicGrid grid() const noexcept { return periodic.grid(); }

  friend AngleField operator+(const AngleField& a, const AngleField& b) {
    return {a.periodic + b.periodic, a.winding + b.winding};
  }
  friend AngleField operator-(const AngleField& a) { return {-a.periodic, -a.winding}; }
};

AngleField compose(const AngleField& alpha, const Diffeo& psi);

/// Reduces an angle difference to (-2 pi, 2 pi].
double wrap_4pi(double angle);

}  // namespace hs2
