#pragma once
// Reference computations for the tests. Nothing here calls into hs2: inputs
// are closed-form trigonometric polynomials or plain callables, and every
// answer comes from direct evaluation, scanning and one-dimensional search.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// mean + sum_k (cos_c[k-1] cos 2 pi k x + sin_c[k-1] sin 2 pi k x).
struct Trig {
  double mean = 0.0;
  std::vector<double> cos_c;
  std::vector<double> sin_c;

  double operator()(double x) const {
    double s = mean;
    for (std::size_t k = 0; k < cos_c.size(); ++k) s += cos_c[k] * std::cos(kTwoPi * double(k + 1) * x);
    for (std::size_t k = 0; k < sin_c.size(); ++k) s += sin_c[k] * std::sin(kTwoPi * double(k + 1) * x);
    return s;
  }

  double deriv(double x) const {
    double s = 0.0;
    for (std::size_t k = 0; k < cos_c.size(); ++k) {
      const double w = kTwoPi * double(k + 1);
      s -= cos_c[k] * w * std::sin(w * x);
    }
    for (std::size_t k = 0; k < sin_c.size(); ++k) {
      const double w = kTwoPi * double(k + 1);
      s += sin_c[k] * w * std::cos(w * x);
    }
    return s;
  }

  /// int_0^x (f - mean) dy, which is periodic.
  double periodic_integral(double x) const {
    double s = 0.0;
    for (std::size_t k = 0; k < cos_c.size(); ++k) {
      const double w = kTwoPi * double(k + 1);
      s += cos_c[k] * std::sin(w * x) / w;
    }
    for (std::size_t k = 0; k < sin_c.size(); ++k) {
      const double w = kTwoPi * double(k + 1);
      s += sin_c[k] * (1.0 - std::cos(w * x)) / w;
    }
    return s;
  }

  /// Sum of coefficient magnitudes: a bound on |f - mean|.
  double amplitude() const {
    double s = 0.0;
    for (double c : cos_c) s += std::abs(c);
    for (double c : sin_c) s += std::abs(c);
    return s;
  }

  Trig scaled(double s) const {
    Trig t = *this;
    t.mean *= s;
    for (double& c : t.cos_c) c *= s;
    for (double& c : t.sin_c) c *= s;
    return t;
  }

  std::vector<double> sample(int n) const {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = (*this)(double(j) / n);
    return v;
  }

  /// Standard normal coefficients damped by 1/k.
  static Trig random(std::mt19937_64& rng, int modes, double mean = 0.0) {
    std::normal_distribution<double> normal;
    Trig t;
    t.mean = mean;
    for (int k = 1; k <= modes; ++k) {
      t.cos_c.push_back(normal(rng) / k);
      t.sin_c.push_back(normal(rng) / k);
    }
    return t;
  }
};

/// Centered difference (f(x+h) - f(x-h)) / 2h.
inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Minimiser of a unimodal g on [lo, hi] by golden-section search.
template <typename G>
double golden_min(G&& g, double lo, double hi, int iterations = 120) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - r * (b - a), d = a + r * (b - a);
  double gc = g(c), gd = g(d);
  for (int i = 0; i < iterations && b - a > 1e-15 * (1.0 + std::abs(a)); ++i) {
    if (gc < gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - r * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + r * (b - a);
      gd = g(d);
    }
  }
  return gc < gd ? c : d;
}

/// min over x in [0, 1) of |h(x)|, by a dense scan of `nx` points followed by
/// golden-section refinement of every promising discrete local minimum.
/// `at_node(j)` must equal h(j / nx); it lets callers reuse cached samples.
template <typename Node, typename H>
double min_modulus(Node&& at_node, H&& h, int nx) {
  std::vector<double> m(static_cast<std::size_t>(nx));
  for (int j = 0; j < nx; ++j) m[static_cast<std::size_t>(j)] = std::abs(at_node(j));
  double best = *std::min_element(m.begin(), m.end());
  const double dx = 1.0 / nx;
  for (int j = 0; j < nx; ++j) {
    const double here = m[static_cast<std::size_t>(j)];
    const double left = m[static_cast<std::size_t>((j + nx - 1) % nx)];
    const double right = m[static_cast<std::size_t>((j + 1) % nx)];
    if (here > left || here > right) continue;
    // Only basins that could beat the current best are worth refining.
    if (here > 4.0 * best + 1e-3) continue;
    const double x0 = double(j) / nx;
    const double xm = golden_min([&](double x) { return std::abs(h(x)); }, x0 - dx, x0 + dx);
    best = std::min(best, std::abs(h(xm)));
  }
  return best;
}

namespace detail {

/// Scans m at n + 1 points of [lo, hi] in order. At the first sample below
/// `level`, or the first discrete local minimum whose golden refinement
/// (or, with depth left, whose own finer scan) drops below `level`, returns
/// {a, z}: m(a) >= level > m(z) with a < z and nothing found before a.
/// Two dips can share one coarse interval, so each candidate interval is
/// rescanned before trusting golden section's single-basin assumption.
inline bool find_dip(const std::function<double(double)>& m, double lo, double hi, int n, double level, int depth,
                     double& a_out, double& z_out) {
  const double dt = (hi - lo) / n;
  std::vector<double> v(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = m(lo + i * dt);
  const double inf = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    const double t = lo + i * dt;
    const double a = std::max(lo, t - dt);
    const double here = v[static_cast<std::size_t>(i)];
    if (here < level) {
      a_out = a;
      z_out = t;
      return true;
    }
    const double left = i > 0 ? v[static_cast<std::size_t>(i - 1)] : inf;
    const double right = i < n ? v[static_cast<std::size_t>(i + 1)] : inf;
    if (here > left || here > right) continue;
    const double b = std::min(hi, t + dt);
    if (depth > 0 && find_dip(m, a, b, 64, level, depth - 1, a_out, z_out)) return true;
    const double z = golden_min(m, a, b, 200);
    if (m(z) < level) {
      a_out = a;
      z_out = z;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// First zero of a nonnegative function m on (lo, hi). m may touch zero in a
/// V shape or vanish on a whole interval. Scans `nt` points, refines each
/// discrete local minimum by a finer scan and golden section and, once a
/// point below `zero_level` is found, bisects back to the onset of the zero
/// set. Returns +inf if m never drops below `zero_level`.
inline double first_zero(const std::function<double(double)>& m, double lo, double hi, int nt,
                         double zero_level) {
  double a = 0.0, z = 0.0;
  if (!detail::find_dip(m, lo, hi, nt, zero_level, 1, a, z)) return std::numeric_limits<double>::infinity();
  if (m(a) < zero_level) return a;
  // m(a) >= zero_level > m(z), and on [a, z] the zero set is one interval
  // ending at or after z, so "below zero_level" is monotone there.
  for (int k = 0; k < 80 && z - a > 1e-15; ++k) {
    const double mid = 0.5 * (a + z);
    (m(mid) < zero_level ? z : a) = mid;
  }
  return z;
}

/// Blow-up time of the sphere curve f(t, x) = cos ct + (u0x + i rho0) sin ct / 2c:
/// the first t in (0, pi/c] where min_x |f(t, x)| reaches zero, from a
/// dense scan in t refined to ~1e-12. +inf if no zero occurs.
inline double blowup_scan(const Trig& u0x, const Trig& rho0, double c, int nx = 1024, int nt = 3000) {
  const auto a = u0x.sample(nx), b = rho0.sample(nx);
  auto curve_min = [&](double t) {
    const double co = std::cos(c * t), si = std::sin(c * t) / (2.0 * c);
    auto node = [&](int j) {
      return cplx(co + a[static_cast<std::size_t>(j)] * si, b[static_cast<std::size_t>(j)] * si);
    };
    return min_modulus(node, [&](double x) { return cplx(co + u0x(x) * si, rho0(x) * si); }, nx);
  };
  return first_zero(curve_min, 0.0, kPi / c, nt, 1e-12);
}

/// Speed c with c^2 = 1/4 int (u0x^2 + rho0^2), by Parseval on the coefficients.
inline double speed(const Trig& u0x, const Trig& rho0) {
  auto power = [](const Trig& t) {
    double s = t.mean * t.mean;
    for (double a : t.cos_c) s += 0.5 * a * a;
    for (double b : t.sin_c) s += 0.5 * b * b;
    return s;
  };
  return std::sqrt(0.25 * (power(u0x) + power(rho0)));
}

/// Sign change of a closed-form function on a dense scan.
inline bool changes_sign(const Trig& f, int samples = 20000) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int j = 0; j < samples; ++j) {
    const double v = f(double(j) / samples);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return lo < 0.0 && hi > 0.0;
}

/// Whether the great-circle arc from f to g in L^2(S^1; C) avoids zero at
/// every x. f and g are closed-form unit-norm functions; the short arc
/// covers angles [0, r0], the long arc [r0, 2 pi]. The arc is sampled at
/// `nr` angles and each discrete dip of min_x |gamma| is refined in the angle.
inline bool arc_avoids_zero(const std::function<cplx(double)>& f, const std::function<cplx(double)>& g,
                            bool long_arc, int nx = 512, int nr = 1000, double level = 1e-6) {
  // <f, g> = Re int f conj(g) by the periodic trapezoid rule on a fine grid.
  const int nq = 4 * nx;
  double fg = 0.0;
  for (int j = 0; j < nq; ++j) {
    const double x = double(j) / nq;
    fg += (f(x) * std::conj(g(x))).real();
  }
  fg /= nq;
  const double r0 = std::acos(std::clamp(fg, -1.0, 1.0));
  auto combine = [&](double r, cplx fx, cplx gx) {
    const cplx dir = (gx - std::cos(r0) * fx) / std::sin(r0);
    return std::cos(r) * fx + std::sin(r) * dir;
  };
  std::vector<cplx> fn(static_cast<std::size_t>(nx)), gn(static_cast<std::size_t>(nx));
  for (int j = 0; j < nx; ++j) {
    fn[static_cast<std::size_t>(j)] = f(double(j) / nx);
    gn[static_cast<std::size_t>(j)] = g(double(j) / nx);
  }
  auto curve_min = [&](double r) {
    auto node = [&](int j) { return combine(r, fn[static_cast<std::size_t>(j)], gn[static_cast<std::size_t>(j)]); };
    return min_modulus(node, [&](double x) { return combine(r, f(x), g(x)); }, nx);
  };
  const double lo = long_arc ? r0 : 0.0, hi = long_arc ? kTwoPi : r0;
  return !std::isfinite(first_zero(curve_min, lo, hi, nr, level));
}

/// Naive O(n^2) evaluation of sum_k c_k exp(2 pi i k y) with the Nyquist term
/// taken as c cos(pi n y); coefficients in FFT order.
inline cplx trig_sum(const std::vector<cplx>& c, double y) {
  const int n = static_cast<int>(c.size());
  cplx s = 0.0;
  for (int i = 0; i < n; ++i) {
    const int k = i <= n / 2 ? i : i - n;
    if (n % 2 == 0 && i == n / 2) {
      s += c[static_cast<std::size_t>(i)] * std::cos(kPi * n * y);
    } else {
      s += c[static_cast<std::size_t>(i)] * std::polar(1.0, kTwoPi * k * y);
    }
  }
  return s;
}

}  // namespace oracle
