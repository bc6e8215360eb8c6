#pragma once

// Connection, curvature and Kahler structure on G and on the quotient K
// (angle fields modulo constants). Everything is evaluated at the identity
// and extended by right invariance, except J and the K metric, which also
// accept a base diffeomorphism.

#include "hs2/group.hpp"

namespace hs2 {

/// (u1, [u2]) with u1(0) = 0 and [u2] stored by its zero-mean representative.
struct KTangent {
  RealFunction u1;
  RealFunction u2;

  /// Pins u1(0) and projects u2 to zero mean.
  static KTangent make(RealFunction u1, RealFunction u2);
  static KTangent from(const TangentVector& v) { return make(v.u1, v.u2); }
  TangentVector as_g() const { return {u1, u2}; }
  PeriodicGrid grid() const noexcept { return u1.grid(); }

  friend KTangent operator+(const KTangent& a, const KTangent& b) { return {a.u1 + b.u1, a.u2 + b.u2}; }
  friend KTangent operator-(const KTangent& a, const KTangent& b) { return {a.u1 - b.u1, a.u2 - b.u2}; }
  friend KTangent operator*(double s, const KTangent& a) { return {s * a.u1, s * a.u2}; }
};

// ---- G --------------------------------------------------------------------

/// -1/2 (A^{-1} d_x (u1x v1x + u2 v2), u1x v2 + v1x u2).
TangentVector christoffel_g(const TangentVector& u, const TangentVector& v);

/// (v_x u1 - Gamma(v, u)) at the identity for right-invariant X, Y with
/// X_e = u and Y_e = v.
TangentVector covariant_g(const TangentVector& u, const TangentVector& v);

/// |u|^2 |v|^2 - <u, v>^2 at the identity.
double curvature_g(const TangentVector& u, const TangentVector& v);
/// <R(u,v)v, u> from the local Christoffel expression.
double curvature_g_local(const TangentVector& u, const TangentVector& v);

// ---- K --------------------------------------------------------------------

TangentVector christoffel_k_g(const KTangent& u, const KTangent& v);  // unprojected, internal use
KTangent christoffel_k(const KTangent& u, const KTangent& v);
KTangent covariant_k(const KTangent& u, const KTangent& v);

double metric_k(const KTangent& u, const KTangent& v);
/// Metric on K at base phi: 1/4 int (U1x V1x / phi_x + pi_phi(U2) pi_phi(V2) phi_x).
double metric_k(const Diffeo& base, const KTangent& u, const KTangent& v);

/// J(U1, [U2]) = (-int_0^x pi_phi(U2) phi_x, [U1x / phi_x]).
KTangent kahler_j(const Diffeo& base, const KTangent& u);
KTangent kahler_j(const KTangent& u);

/// 1/4 int (U2x V1 - V2x U1).
double symplectic_omega(const KTangent& u, const KTangent& v);

/// (v1x u1 - u1x v1, [v2x u1 - u2x v1]).
KTangent bracket_k(const KTangent& u, const KTangent& v);

struct NijenhuisTerms {
  KTangent total;
  double max_summand_norm;
};
NijenhuisTerms nijenhuis_terms(const KTangent& u, const KTangent& v);
KTangent nijenhuis(const KTangent& u, const KTangent& v);

double curvature_k_closed(const KTangent& u, const KTangent& v);
double curvature_k_local(const KTangent& u, const KTangent& v);
/// curvature_k_closed divided by the Gram determinant; DegeneratePlane when
/// the relative Gram determinant is below 1e-12.
double sectional_curvature(const KTangent& u, const KTangent& v);

/// (DJ . u)(v) = (A^{-1} d_x (pi(v2) u1x), -[v1x u1x]).
KTangent dj(const KTangent& u, const KTangent& v);
/// (DJ.u)(v) - Gamma(Jv, u) + J Gamma(v, u); vanishes identically.
KTangent nabla_j(const KTangent& u, const KTangent& v);

// Residuals of the parallelism identities for right-invariant fields.
double compatibility_residual_g(const TangentVector& u, const TangentVector& v, const TangentVector& w);
double compatibility_residual_k(const KTangent& u, const KTangent& v, const KTangent& w);
double omega_parallel_residual(const KTangent& u, const KTangent& v, const KTangent& w);

/// Norm induced by metric_k at the identity.
double norm_k(const KTangent& u);

}  // namespace hs2
