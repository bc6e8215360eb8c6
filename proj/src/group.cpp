#include "hs2/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hs2 {

TangentVector TangentVector::make(RealFunction u1, RealFunction u2) {
  const double u10 = u1[0];
  if (std::abs(u10) > 1e-10) {
    throw Error(ErrorKind::InvalidArgument, "u1(0) must vanish, got " + std::to_string(u10));
  }
  if (u10 != 0.0) u1 = u1 - u10;
  return {std::move(u1), std::move(u2)};
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  return {compose(a.phi, b.phi), b.alpha + compose(a.alpha, b.phi)};
}

GroupElement inverse(const GroupElement& a) {
  auto inv = invert_diffeo(a.phi);
  auto alpha = -compose(a.alpha, inv);
  return {std::move(inv), std::move(alpha)};
}

double metric(const GroupElement& at, const TangentVector& u, const TangentVector& v) {
  const auto& phix = at.phi.phi_x();
  return 0.25 * integrate(derivative(u.u1) * derivative(v.u1) / phix + u.u2 * v.u2 * phix);
}

double metric_at_identity(const TangentVector& u, const TangentVector& v) {
  return 0.25 * integrate(derivative(u.u1) * derivative(v.u1) + u.u2 * v.u2);
}

TangentVector right_translate(const TangentVector& u, const GroupElement& at) {
  return TangentVector::make(compose(u.u1, at.phi), compose(u.u2, at.phi));
}

ComplexFunction half_phase(const AngleField& alpha) {
  return alpha.lift().map([](double a) { return std::polar(1.0, 0.5 * a); });
}

SpherePoint phi_map(const GroupElement& a) {
  const auto root = a.phi.phi_x().map([](double v) { return std::sqrt(v); });
  return SpherePoint(to_complex(root) * half_phase(a.alpha));
}

GroupElement phi_inverse(const SpherePoint& f, const PhiInverseOptions& opts) {
  const auto& v = f.values();
  const auto grid = v.grid();
  const int n = grid.size();
  for (int j = 0; j < n; ++j) {
    if (!(std::abs(v[j]) > opts.modulus_tolerance)) {
      throw Error(ErrorKind::VanishingModulus, "|f| vanishes at node " + std::to_string(j));
    }
  }

  // Continuous branch of arg f, starting in [0, 2 pi) so alpha(0) is in [0, 4 pi).
  std::vector<double> theta(static_cast<std::size_t>(n) + 1);
  double t0 = std::arg(v[0]);
  if (t0 < 0.0) t0 += kTwoPi;
  theta[0] = t0;
  for (int j = 1; j <= n; ++j) {
    const cplx step = v[j % n] / v[j - 1];
    const double jump = std::arg(step);
    if (std::abs(jump) > opts.max_phase_jump) {
      throw Error(ErrorKind::UnwrapAmbiguity, "phase jump " + std::to_string(jump) + " at node " + std::to_string(j));
    }
    theta[static_cast<std::size_t>(j)] = theta[static_cast<std::size_t>(j - 1)] + jump;
  }
  const int winding = static_cast<int>(std::lround((theta[static_cast<std::size_t>(n)] - theta[0]) / kTwoPi));
  std::vector<double> periodic(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    periodic[static_cast<std::size_t>(j)] = 2.0 * theta[static_cast<std::size_t>(j)] - kFourPi * winding * grid.node(j);
  }

  // phi(x) = int_0^x |f|^2 with int |f|^2 = 1, so phi - x is the periodic
  // antiderivative of |f|^2.
  const auto density = v.map([](cplx z) { return std::norm(z); });
  auto phi = Diffeo::from_shift(periodic_antiderivative(density));
  return {std::move(phi), AngleField{RealFunction(grid, std::move(periodic)), winding}};
}

ComplexFunction tangent_phi(const GroupElement& at, const TangentVector& u) {
  const auto& phix = at.phi.phi_x();
  const auto num = to_complex(derivative(u.u1), u.u2 * phix);
  const auto scale = phix.map([](double p) { return cplx(0.5 / std::sqrt(p)); });
  return num * scale * half_phase(at.alpha);
}

double group_distance(const GroupElement& a, const GroupElement& b) {
  const double dphi = max_abs(a.phi.shift() - b.phi.shift());
  const auto la = a.alpha.lift();
  const auto lb = b.alpha.lift();
  double dalpha = 0.0;
  for (int j = 0; j < la.size(); ++j) dalpha = std::max(dalpha, std::abs(wrap_4pi(la[j] - lb[j])));
  return std::max(dphi, dalpha);
}

}  // namespace hs2
