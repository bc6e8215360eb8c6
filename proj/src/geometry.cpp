#include "hs2/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hs2 {
namespace {

// Local curvature expression shared by G and K. `Ops` supplies the
// Christoffel map, the inner product at the identity and the vector
// (a1x s, a2x s) built from a tangent a and a scalar function s.
template <typename V, typename Ops>
double local_curvature(const V& u, const V& v, const Ops& ops) {
  const auto g_uv = ops.gamma(u, v);
  const auto g_uu = ops.gamma(u, u);
  const auto g_vv = ops.gamma(v, v);
  double r = ops.inner(g_uv, g_uv) - ops.inner(g_uu, g_vv);
  r -= ops.inner(ops.xmul(u, v.u1), g_uv);
  r += ops.inner(ops.xmul(u, u.u1), g_vv);
  const auto tail = -1.0 * ops.gamma(ops.xmul(v, v.u1), u) - ops.gamma(v, ops.xmul(u, v.u1)) +
                    2.0 * ops.gamma(ops.xmul(v, u.u1), v);
  return r + ops.inner(tail, u);
}

struct GOps {
  TangentVector gamma(const TangentVector& a, const TangentVector& b) const { return christoffel_g(a, b); }
  double inner(const TangentVector& a, const TangentVector& b) const { return metric_at_identity(a, b); }
  TangentVector xmul(const TangentVector& a, const RealFunction& s) const {
    return {derivative(a.u1) * s, derivative(a.u2) * s};
  }
};

struct KOps {
  KTangent gamma(const KTangent& a, const KTangent& b) const { return christoffel_k(a, b); }
  double inner(const KTangent& a, const KTangent& b) const { return metric_k(a, b); }
  KTangent xmul(const KTangent& a, const RealFunction& s) const {
    return {derivative(a.u1) * s, mean_projection(derivative(a.u2) * s)};
  }
};

double gram(double uu, double vv, double uv) { return uu * vv - uv * uv; }

}  // namespace

KTangent KTangent::make(RealFunction u1, RealFunction u2) {
  auto t = TangentVector::make(std::move(u1), std::move(u2));
  return {std::move(t.u1), mean_projection(t.u2)};
}

TangentVector christoffel_g(const TangentVector& u, const TangentVector& v) {
  const auto ux = derivative(u.u1), vx = derivative(v.u1);
  return {inverse_A_derivative(ux * vx + u.u2 * v.u2) * -0.5, (ux * v.u2 + vx * u.u2) * -0.5};
}

TangentVector covariant_g(const TangentVector& u, const TangentVector& v) {
  const auto gam = christoffel_g(v, u);
  return {derivative(v.u1) * u.u1 - gam.u1, derivative(v.u2) * u.u1 - gam.u2};
}

double curvature_g(const TangentVector& u, const TangentVector& v) {
  return gram(metric_at_identity(u, u), metric_at_identity(v, v), metric_at_identity(u, v));
}

double curvature_g_local(const TangentVector& u, const TangentVector& v) { return local_curvature(u, v, GOps{}); }

TangentVector christoffel_k_g(const KTangent& u, const KTangent& v) {
  const auto ux = derivative(u.u1), vx = derivative(v.u1);
  const auto pu = mean_projection(u.u2), pv = mean_projection(v.u2);
  return {inverse_A_derivative(ux * vx + pu * pv) * -0.5, (ux * pv + vx * pu) * -0.5};
}

KTangent christoffel_k(const KTangent& u, const KTangent& v) {
  auto g = christoffel_k_g(u, v);
  return {std::move(g.u1), mean_projection(g.u2)};
}

KTangent covariant_k(const KTangent& u, const KTangent& v) {
  const auto gam = christoffel_k(v, u);
  return {derivative(v.u1) * u.u1 - gam.u1, mean_projection(derivative(v.u2) * u.u1 - gam.u2)};
}

double metric_k(const KTangent& u, const KTangent& v) {
  return 0.25 * integrate(derivative(u.u1) * derivative(v.u1) + mean_projection(u.u2) * mean_projection(v.u2));
}

double metric_k(const Diffeo& base, const KTangent& u, const KTangent& v) {
  const auto& phix = base.phi_x();
  const auto pu = u.u2 - integrate(u.u2 * phix);
  const auto pv = v.u2 - integrate(v.u2 * phix);
  return 0.25 * integrate(derivative(u.u1) * derivative(v.u1) / phix + pu * pv * phix);
}

KTangent kahler_j(const Diffeo& base, const KTangent& u) {
  const auto& phix = base.phi_x();
  const auto pu = u.u2 - integrate(u.u2 * phix);
  // pi_phi(U2) phi_x has zero mean, so the antiderivative is periodic.
  return KTangent::make(periodic_antiderivative(pu * phix) * -1.0, derivative(u.u1) / phix);
}

KTangent kahler_j(const KTangent& u) {
  return KTangent::make(periodic_antiderivative(mean_projection(u.u2)) * -1.0, derivative(u.u1));
}

double symplectic_omega(const KTangent& u, const KTangent& v) {
  return 0.25 * integrate(derivative(u.u2) * v.u1 - derivative(v.u2) * u.u1);
}

KTangent bracket_k(const KTangent& u, const KTangent& v) {
  return {derivative(v.u1) * u.u1 - derivative(u.u1) * v.u1,
          mean_projection(derivative(v.u2) * u.u1 - derivative(u.u2) * v.u1)};
}

NijenhuisTerms nijenhuis_terms(const KTangent& u, const KTangent& v) {
  const auto ju = kahler_j(u), jv = kahler_j(v);
  const KTangent terms[] = {bracket_k(u, v), kahler_j(bracket_k(ju, v)), kahler_j(bracket_k(u, jv)),
                            -1.0 * bracket_k(ju, jv)};
  double m = 0.0;
  for (const auto& t : terms) m = std::max(m, norm_k(t));
  return {terms[0] + terms[1] + terms[2] + terms[3], m};
}

KTangent nijenhuis(const KTangent& u, const KTangent& v) { return nijenhuis_terms(u, v).total; }

double curvature_k_closed(const KTangent& u, const KTangent& v) {
  const double w = symplectic_omega(u, v);
  return gram(metric_k(u, u), metric_k(v, v), metric_k(u, v)) + 3.0 * w * w;
}

double curvature_k_local(const KTangent& u, const KTangent& v) { return local_curvature(u, v, KOps{}); }

double sectional_curvature(const KTangent& u, const KTangent& v) {
  const double uu = metric_k(u, u), vv = metric_k(v, v), uv = metric_k(u, v);
  const double area = gram(uu, vv, uv);
  if (!(uu > 0.0 && vv > 0.0) || area <= 1e-12 * uu * vv) {
    throw Error(ErrorKind::DegeneratePlane, "tangent vectors are (nearly) linearly dependent");
  }
  return curvature_k_closed(u, v) / area;
}

KTangent dj(const KTangent& u, const KTangent& v) {
  const auto ux = derivative(u.u1);
  return {inverse_A_derivative(mean_projection(v.u2) * ux), mean_projection(derivative(v.u1) * ux) * -1.0};
}

KTangent nabla_j(const KTangent& u, const KTangent& v) {
  return dj(u, v) - christoffel_k(kahler_j(v), u) + kahler_j(christoffel_k(v, u));
}

double compatibility_residual_g(const TangentVector& u, const TangentVector& v, const TangentVector& w) {
  return std::abs(metric_at_identity(covariant_g(u, v), w) + metric_at_identity(v, covariant_g(u, w)));
}

double compatibility_residual_k(const KTangent& u, const KTangent& v, const KTangent& w) {
  return std::abs(metric_k(covariant_k(u, v), w) + metric_k(v, covariant_k(u, w)));
}

double omega_parallel_residual(const KTangent& u, const KTangent& v, const KTangent& w) {
  return std::abs(symplectic_omega(covariant_k(u, v), w) + symplectic_omega(v, covariant_k(u, w)));
}

double norm_k(const KTangent& u) { return std::sqrt(metric_k(u, u)); }

}  // namespace hs2
