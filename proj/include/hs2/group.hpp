#pragma once

// The semidirect product of Diff_0(S^1) with angle maps into the circle of
// length 4 pi, its right-invariant metric and the isometry onto the sphere.

#include "hs2/diffeo.hpp"
#include "hs2/sphere.hpp"

namespace hs2 {

struct GroupElement {
  Diffeo phi;
  AngleField alpha;

  static GroupElement identity(PeriodicGrid grid) { return {Diffeo::identity(grid), AngleField::zero(grid)}; }
  PeriodicGrid grid() const noexcept { return phi.grid(); }
};

/// (U1, U2) at some group point; U1 vanishes at 0.
struct TangentVector {
  RealFunction u1;
  RealFunction u2;

  /// Pins u1(0) to exactly zero; throws InvalidArgument if it is far off.
  static TangentVector make(RealFunction u1, RealFunction u2);
  PeriodicGrid grid() const noexcept { return u1.grid(); }

  friend TangentVector operator+(const TangentVector& a, const TangentVector& b) { return {a.u1 + b.u1, a.u2 + b.u2}; }
  friend TangentVector operator-(const TangentVector& a, const TangentVector& b) { return {a.u1 - b.u1, a.u2 - b.u2}; }
  friend TangentVector operator*(double s, const TangentVector& a) { return {s * a.u1, s * a.u2}; }
};

/// (phi, alpha)(psi, beta) = (phi o psi, beta + alpha o psi).
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

/// 1/4 int (U1x V1x / phi_x + U2 V2 phi_x).
double metric(const GroupElement& at, const TangentVector& u, const TangentVector& v);
double metric_at_identity(const TangentVector& u, const TangentVector& v);

/// Right translation of (u, rho) at the identity to the point `at`.
TangentVector right_translate(const TangentVector& u, const GroupElement& at);

/// e^{i alpha / 2} on the grid.
ComplexFunction half_phase(const AngleField& alpha);

SpherePoint phi_map(const GroupElement& a);

struct PhiInverseOptions {
  double modulus_tolerance = 1e-8;
  double max_phase_jump = 1.5707963267948966;
};
GroupElement phi_inverse(const SpherePoint& f, const PhiInverseOptions& opts = {});

ComplexFunction tangent_phi(const GroupElement& at, const TangentVector& u);

/// Max over nodes of |phi_a - phi_b| and |alpha_a - alpha_b| reduced mod 4 pi.
double group_distance(const GroupElement& a, const GroupElement& b);

}  // namespace hs2
