#include "hs2/diffeo.hpp"

#include <cmath>
#include <string>

#include "hs2/kernels.hpp"
#include "hs2/spectral.hpp"

namespace hs2 {
namespace {

std::vector<double> shifted_nodes(const Diffeo& phi) {
  std::vector<double> pts(static_cast<std::size_t>(phi.grid().size()));
  for (int j = 0; j < phi.grid().size(); ++j) pts[static_cast<std::size_t>(j)] = phi.grid().node(j) + phi.shift()[j];
  return pts;
}

}  // namespace

Diffeo Diffeo::identity(PeriodicGrid grid) { return Diffeo(RealFunction(grid), RealFunction(grid, 1.0)); }

Diffeo Diffeo::from_shift(RealFunction shift) {
  const double h0 = shift[0];
  if (std::abs(h0) > kMonotoneTolerance) {
    throw Error(ErrorKind::InvalidArgument, "diffeomorphism must fix 0, phi(0) = " + std::to_string(h0));
  }
  if (h0 != 0.0) shift = shift - h0;

  const auto& g = shift.grid();
  double prev = 0.0;
  for (int j = 1; j <= g.size(); ++j) {
    const double next = j < g.size() ? g.node(j) + shift[j] : 1.0;
    if (!(next > prev)) {
      throw Error(ErrorKind::NotMonotone, "lift is not strictly increasing at node " + std::to_string(j));
    }
    prev = next;
  }
  auto phi_x = derivative(shift) + 1.0;
  const double m = min_value(phi_x);
  if (!(m > kMonotoneTolerance)) {
    throw Error(ErrorKind::NotMonotone, "min phi_x = " + std::to_string(m));
  }
  return Diffeo(std::move(shift), std::move(phi_x));
}

Diffeo Diffeo::from_lift(PeriodicGrid grid, std::span<const double> lift) {
  if (static_cast<int>(lift.size()) != grid.size()) {
    throw Error(ErrorKind::InvalidArgument, "lift sample count does not match grid");
  }
  std::vector<double> h(lift.size());
  for (int j = 0; j < grid.size(); ++j) h[static_cast<std::size_t>(j)] = lift[static_cast<std::size_t>(j)] - grid.node(j);
  return from_shift(RealFunction(grid, std::move(h)));
}

RealFunction Diffeo::lift() const { return shift_ + identity_function(grid()); }

RealFunction compose(const RealFunction& f, const Diffeo& phi) {
  if (!(f.grid() == phi.grid())) throw Error(ErrorKind::InvalidArgument, "grid mismatch in compose");
  const auto pts = shifted_nodes(phi);
  return RealFunction(f.grid(), interpolate(f, pts));
}

ComplexFunction compose(const ComplexFunction& f, const Diffeo& phi) {
  if (!(f.grid() == phi.grid())) throw Error(ErrorKind::InvalidArgument, "grid mismatch in compose");
  const auto pts = shifted_nodes(phi);
  return ComplexFunction(f.grid(), interpolate(f, pts));
}

Diffeo compose(const Diffeo& phi, const Diffeo& psi) {
  // phi(psi(x)) = x + h_psi(x) + h_phi(psi(x))
  return Diffeo::from_shift(psi.shift() + compose(phi.shift(), psi));
}

Diffeo invert_diffeo(const Diffeo& phi) {
  const auto grid = phi.grid();
  const auto c = spectral::forward(std::span<const double>(phi.shift().values()));
  const auto node_lift = phi.lift();
  const auto targets = grid.nodes();
  std::vector<double> x(targets.size());
  kernels::invert_lift({c}, node_lift.values(), targets, x, kernels::Exec::Parallel);
  std::vector<double> h(targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j) h[j] = x[j] - targets[j];
  h[0] = 0.0;
  return Diffeo::from_shift(RealFunction(grid, std::move(h)));
}

RealFunction AngleField::lift() const {
  const double w = kFourPi * winding;
  return periodic + identity_function(grid()) * w;
}

AngleField compose(const AngleField& alpha, const Diffeo& psi) {
  return {compose(alpha.periodic, psi) + psi.shift() * (kFourPi * alpha.winding), alpha.winding};
}

double wrap_4pi(double angle) {
  double r = std::fmod(angle, kFourPi);
  if (r > kTwoPi) r -= kFourPi;
  if (r <= -kTwoPi) r += kFourPi;
  return r;
}

}  // namespace hs2
