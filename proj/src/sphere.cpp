#include "hs2/sphere.hpp"

#include <cmath>
#include <string>

namespace hs2 {
namespace {

constexpr double kPoleTolerance = 1e-8;

double distance(const ComplexFunction& a, const ComplexFunction& b) { return l2_norm(a - b); }

ComplexFunction scaled(const ComplexFunction& f, double s) { return f * cplx(s); }

}  // namespace

SpherePoint::SpherePoint(ComplexFunction f) : f_(std::move(f)) {
  const double norm = l2_norm(f_);
  if (std::abs(norm - 1.0) >= kRenormalizeTolerance) {
    throw Error(ErrorKind::NotUnitNorm, "L2 norm " + std::to_string(norm) + " is not 1");
  }
  if (norm != 1.0) f_ = scaled(f_, 1.0 / norm);
}

SpherePoint SpherePoint::normalized(const ComplexFunction& f) {
  const double norm = l2_norm(f);
  if (!(norm > 0.0)) throw Error(ErrorKind::NotUnitNorm, "cannot normalise the zero function");
  return SpherePoint(scaled(f, 1.0 / norm));
}

SpherePoint SpherePoint::one(PeriodicGrid grid) { return SpherePoint(ComplexFunction(grid, cplx(1.0))); }

SphereTangent::SphereTangent(ComplexFunction x, SpherePoint base) : x_(std::move(x)), base_(std::move(base)) {
  const double radial = l2_inner(x_, base_.values());
  if (std::abs(radial) > 1e-10 * std::max(1.0, l2_norm(x_))) {
    throw Error(ErrorKind::NotTangent, "Re<X, f> = " + std::to_string(radial));
  }
}

double inner_with_one(const SpherePoint& f) { return integrate(f.values()).real(); }

SpherePoint great_circle(const SpherePoint& f, const ComplexFunction& unit_dir, double r) {
  return SpherePoint(f.values() * cplx(std::cos(r)) + unit_dir * cplx(std::sin(r)));
}

SpherePoint exp_at_one(const SphereTangent& x) {
  const auto one = SpherePoint::one(x.values().grid());
  if (distance(x.base().values(), one.values()) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument, "exp_at_one needs a tangent at the constant function 1");
  }
  const double r = l2_norm(x.values());
  if (r < 1e-14) throw Error(ErrorKind::ZeroTangent, "tangent has norm " + std::to_string(r));
  return great_circle(one, scaled(x.values(), 1.0 / r), r);
}

SphereLog log_at_one(const SpherePoint& f) {
  const auto& v = f.values();
  const ComplexFunction one(v.grid(), cplx(1.0));
  if (distance(v, one) <= kPoleTolerance || distance(v, -one) <= kPoleTolerance) {
    throw Error(ErrorKind::AntipodalOrIdentity, "log at 1 is not unique for f = +-1");
  }
  const double mu = inner_with_one(f);
  const auto x = (v - cplx(mu)) * cplx(1.0 / std::sqrt(1.0 - mu * mu));
  return {std::acos(mu), x};
}

ComplexFunction stereo_south(const SpherePoint& f) {
  const auto& v = f.values();
  if (distance(v, ComplexFunction(v.grid(), cplx(-1.0))) < kPoleTolerance) {
    throw Error(ErrorKind::AtPole, "south projection is undefined at -1");
  }
  const double mu = inner_with_one(f);
  return (v - cplx(mu)) * cplx(1.0 / (1.0 + mu));
}

SpherePoint stereo_south_inverse(const ComplexFunction& h) {
  const double hh = l2_inner(h, h);
  return SpherePoint((h * cplx(2.0) + cplx(1.0 - hh)) * cplx(1.0 / (hh + 1.0)));
}

ComplexFunction stereo_north(const SpherePoint& f) {
  const auto& v = f.values();
  if (distance(v, ComplexFunction(v.grid(), cplx(1.0))) < kPoleTolerance) {
    throw Error(ErrorKind::AtPole, "north projection is undefined at 1");
  }
  const double mu = inner_with_one(f);
  return (v - cplx(mu)) * cplx(1.0 / (1.0 - mu));
}

SpherePoint stereo_north_inverse(const ComplexFunction& h) {
  const double hh = l2_inner(h, h);
  return SpherePoint((h * cplx(2.0) + cplx(hh - 1.0)) * cplx(1.0 / (hh + 1.0)));
}

bool is_nowhere_vanishing(const SpherePoint& f, double tolerance) {
  for (const cplx& v : f.values().values()) {
    if (!(std::abs(v) > tolerance)) return false;
  }
  return true;
}

bool segment_in_U(const SpherePoint& f, const SpherePoint& g, Segment which, double tolerance) {
  if (distance(f.values(), g.values()) < kPoleTolerance || distance(f.values(), -g.values()) < kPoleTolerance) {
    throw Error(ErrorKind::ProportionalPoints, "segment endpoints coincide up to sign");
  }
  const int n = f.grid().size();
  std::vector<cplx> ratio(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) ratio[static_cast<std::size_t>(j)] = f[j] / g[j];

  // Only a real ratio can put a zero on the arc: a negative one on the
  // short arc, either sign on the long arc.
  auto bad_real = [which](double re) { return which == Segment::Long || re < 0.0; };

  for (int j = 0; j < n; ++j) {
    const cplx r = ratio[static_cast<std::size_t>(j)];
    if (std::abs(r.imag()) <= tolerance * std::abs(r) && bad_real(r.real())) return false;
  }
  for (int j = 0; j < n; ++j) {
    const cplx a = ratio[static_cast<std::size_t>(j)];
    const cplx b = ratio[static_cast<std::size_t>((j + 1) % n)];
    if ((a.imag() > 0.0 && b.imag() < 0.0) || (a.imag() < 0.0 && b.imag() > 0.0)) {
      const double s = a.imag() / (a.imag() - b.imag());
      if (bad_real(a.real() + s * (b.real() - a.real()))) return false;
    }
  }
  return true;
}

}  // namespace hs2
