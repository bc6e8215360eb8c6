#pragma once

// The fibrations p: G -> K and q: S -> CP, horizontal splittings, the
// Fubini-Study metric and the O'Neill curvature identity.

#include "hs2/geometry.hpp"

namespace hs2 {

/// (phi, [alpha]) with the class represented by the lift satisfying alpha(0) = 0.
struct KPoint {
  Diffeo phi;
  AngleField alpha;
};

/// [f] represented by the unique f with f(0) real and positive.
struct CPPoint {
  SpherePoint rep;
};

KPoint project_p(const GroupElement& a);
CPPoint project_q(const SpherePoint& f);
/// Psi(phi, [alpha]) = q(Phi(phi, alpha)).
CPPoint psi_map(const KPoint& k);

SphereTangent horizontal_sphere(const SphereTangent& x);
/// (U1, U2 - int U2 phi_x).
TangentVector horizontal_g(const TangentVector& u, const GroupElement& at);
/// (0, int U2 phi_x).
TangentVector vertical_g(const TangentVector& u, const GroupElement& at);

double fubini_study(const SphereTangent& x, const SphereTangent& y);

/// Max-norm distance between the two canonical representatives of
/// q(Phi(a)) and Psi(p(a)).
double check_diagram(const GroupElement& a);

struct ONeill {
  double lhs;
  double rhs;
  double residual;  // relative
};
ONeill oneill_check(const KTangent& u, const KTangent& v);

/// f(. + x0) / f(x0) on the grid, with x0 the node of index `x0_index`.
ComplexFunction cp_chart(int x0_index, const CPPoint& f);
/// Inverse chart: h with h(0) = 1 mapped back to [h(. - x0)].
CPPoint cp_chart_inverse(int x0_index, const ComplexFunction& h);

/// Max-norm distance between canonical representatives.
double cp_distance(const CPPoint& a, const CPPoint& b);

}  // namespace hs2
