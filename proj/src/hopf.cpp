#include "hs2/hopf.hpp"

#include <cmath>
#include <string>

namespace hs2 {
namespace {

ComplexFunction cyclic_shift(const ComplexFunction& f, int by) {
  const int n = f.size();
  std::vector<cplx> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = f[((j + by) % n + n) % n];
  return ComplexFunction(f.grid(), std::move(v));
}

}  // namespace

KPoint project_p(const GroupElement& a) {
  const double a0 = a.alpha.periodic[0];
  return {a.phi, AngleField{a.alpha.periodic - a0, a.alpha.winding}};
}

CPPoint project_q(const SpherePoint& f) {
  const cplx f0 = f[0];
  const double m = std::abs(f0);
  if (m < 1e-10) throw Error(ErrorKind::ZeroAtBasePoint, "|f(0)| = " + std::to_string(m));
  const cplx gauge = std::conj(f0) / m;
  auto rep = f.values() * gauge;
  std::vector<cplx> v(rep.values());
  v[0] = cplx(m, 0.0);
  return {SpherePoint(ComplexFunction(f.grid(), std::move(v)))};
}

CPPoint psi_map(const KPoint& k) { return project_q(phi_map(GroupElement{k.phi, k.alpha})); }

SphereTangent horizontal_sphere(const SphereTangent& x) {
  const auto& g = x.base().values();
  const double c = integrate(g * conjugate(x.values())).imag();
  return SphereTangent(x.values() + g * cplx(0.0, c), x.base());
}

TangentVector horizontal_g(const TangentVector& u, const GroupElement& at) {
  return {u.u1, u.u2 - integrate(u.u2 * at.phi.phi_x())};
}

TangentVector vertical_g(const TangentVector& u, const GroupElement& at) {
  return {RealFunction(u.grid()), RealFunction(u.grid(), integrate(u.u2 * at.phi.phi_x()))};
}

double fubini_study(const SphereTangent& x, const SphereTangent& y) {
  if (l2_norm(x.base().values() - y.base().values()) > 1e-12) {
    throw Error(ErrorKind::BaseMismatch, "tangents live at different base points");
  }
  return l2_inner(horizontal_sphere(x).values(), horizontal_sphere(y).values());
}

double cp_distance(const CPPoint& a, const CPPoint& b) { return max_abs(a.rep.values() - b.rep.values()); }

double check_diagram(const GroupElement& a) { return cp_distance(project_q(phi_map(a)), psi_map(project_p(a))); }

ONeill oneill_check(const KTangent& u, const KTangent& v) {
  const double lhs = curvature_k_closed(u, v);
  const TangentVector uh{u.u1, mean_projection(u.u2)};
  const TangentVector vh{v.u1, mean_projection(v.u2)};
  // [u^h, v^h]^v = (0, kappa) with |(0, kappa)|^2 = kappa^2 / 4.
  const double kappa = integrate(derivative(vh.u2) * uh.u1 - derivative(uh.u2) * vh.u1);
  const double rhs = curvature_g(uh, vh) + 0.75 * 0.25 * kappa * kappa;
  const double scale = std::max(std::abs(lhs), 1e-300);
  return {lhs, rhs, std::abs(lhs - rhs) / scale};
}

ComplexFunction cp_chart(int x0_index, const CPPoint& f) {
  const int n = f.rep.grid().size();
  const int j0 = ((x0_index % n) + n) % n;
  const cplx f0 = f.rep[j0];
  if (std::abs(f0) <= 1e-10) throw Error(ErrorKind::ZeroAtChartPoint, "f vanishes at the chart point");
  return cyclic_shift(f.rep.values(), j0) * (1.0 / f0);
}

CPPoint cp_chart_inverse(int x0_index, const ComplexFunction& h) {
  return project_q(SpherePoint::normalized(cyclic_shift(h, -x0_index)));
}

}  // namespace hs2
