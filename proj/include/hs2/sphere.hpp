#pragma once

// The unit sphere of L^2(S^1; C): points, tangents, exp/log at the constant
// function 1, stereographic charts and the nowhere-vanishing subset.

#include "hs2/funcspace.hpp"

namespace hs2 {

class SpherePoint {
 public:
  /// Norm deviations below this are silently renormalised; larger ones throw.
  static constexpr double kRenormalizeTolerance = 1e-6;

  explicit SpherePoint(ComplexFunction f);
  /// Scales any nonzero function onto the sphere.
  static SpherePoint normalized(const ComplexFunction& f);
  static SpherePoint one(PeriodicGrid grid);

  const ComplexFunction& values() const noexcept { return f_; }
  PeriodicGrid grid() const noexcept { return f_.grid(); }
  const cplx& operator[](int j) const { return f_[j]; }

 private:
  ComplexFunction f_;
};

class SphereTangent {
 public:
  SphereTangent(ComplexFunction x, SpherePoint base);

  const ComplexFunction& values() const noexcept { return x_; }
  const SpherePoint& base() const noexcept { return base_; }

 private:
  ComplexFunction x_;
  SpherePoint base_;
};

/// Re <f, 1> = Re int f.
double inner_with_one(const SpherePoint& f);

/// cos r + Xhat sin r with r = |X|.
SpherePoint exp_at_one(const SphereTangent& x);

/// Point at arc length r along the great circle through f with unit tangent
/// direction `unit_dir` (orthogonal to f).
SpherePoint great_circle(const SpherePoint& f, const ComplexFunction& unit_dir, double r);

struct SphereLog {
  double r0;
  ComplexFunction direction;  // unit, orthogonal to 1
};

SphereLog log_at_one(const SpherePoint& f);

ComplexFunction stereo_south(const SpherePoint& f);
SpherePoint stereo_south_inverse(const ComplexFunction& h);
ComplexFunction stereo_north(const SpherePoint& f);
SpherePoint stereo_north_inverse(const ComplexFunction& h);

bool is_nowhere_vanishing(const SpherePoint& f, double tolerance = 1e-8);

enum class Segment { Short, Long };

/// Whether the short or long great-circle arc between f and g stays in the
/// nowhere-vanishing set. A node counts as "f/g real" when |Im(f/g)| is below
/// `tolerance` * |f/g|; sign flips of Im(f/g) between neighbouring nodes are
/// treated as a crossing as well.
bool segment_in_U(const SpherePoint& f, const SpherePoint& g, Segment which, double tolerance = 1e-10);

}  // namespace hs2
