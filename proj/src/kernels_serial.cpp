#include <algorithm>
#include <cmath>
#include <numbers>

#include "hs2/kernels.hpp"

namespace hs2::kernels {
namespace detail {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Shared body of the value / value+derivative evaluations. Powers of
// z = exp(2 pi i y) are built by repeated multiplication, which costs one
// ulp per step and keeps the inner loop free of transcendental calls.
template <bool WithDerivative>
void evaluate(TrigSeries s, double y, cplx& value, cplx& deriv) {
  const int n = static_cast<int>(s.coeffs.size());
  const int half = n / 2;
  const cplx z = std::polar(1.0, kTwoPi * y);
  const cplx zc = std::conj(z);
  cplx pos = 1.0, neg = 1.0;
  cplx v = s.coeffs[0];
  cplx d = 0.0;
  for (int k = 1; k < half; ++k) {
    pos *= z;
    neg *= zc;
    const cplx cp = s.coeffs[static_cast<std::size_t>(k)];
    const cplx cm = s.coeffs[static_cast<std::size_t>(n - k)];
    v += cp * pos + cm * neg;
    if constexpr (WithDerivative) d += static_cast<double>(k) * (cp * pos - cm * neg);
  }
  const double arg = std::numbers::pi * n * y;
  const cplx nyq = s.coeffs[static_cast<std::size_t>(half)];
  v += nyq * std::cos(arg);
  value = v;
  if constexpr (WithDerivative) {
    deriv = cplx(0.0, kTwoPi) * d - nyq * (std::numbers::pi * n * std::sin(arg));
  }
}

}  // namespace

cplx trig_point(TrigSeries s, double y) {
  cplx v, d;
  evaluate<false>(s, y, v, d);
  return v;
}

void trig_point_with_derivative(TrigSeries s, double y, cplx& value, cplx& deriv) {
  evaluate<true>(s, y, value, deriv);
}

double invert_point(TrigSeries shift, std::span<const double> node_lift, double target) {
  const int n = static_cast<int>(node_lift.size());
  const double wraps = std::floor(target);
  const double y = target - wraps;

  // node_lift[0] = 0 and the implicit node_lift[n] = 1 bracket every y in [0,1).
  const auto it = std::upper_bound(node_lift.begin(), node_lift.end(), y);
  const int j = static_cast<int>(it - node_lift.begin()) - 1;
  double lo = static_cast<double>(j) / n;
  double hi = static_cast<double>(j + 1) / n;
  const double f_lo = node_lift[static_cast<std::size_t>(j)] - y;
  const double f_hi = (j + 1 < n ? node_lift[static_cast<std::size_t>(j + 1)] : 1.0) - y;
  if (f_lo == 0.0) return wraps + lo;

  double x = lo + (hi - lo) * (-f_lo) / (f_hi - f_lo);
  for (int iter = 0; iter < 80; ++iter) {
    cplx h, dh;
    trig_point_with_derivative(shift, x, h, dh);
    const double g = x + h.real() - y;
    if (g == 0.0) break;
    if (g < 0.0) lo = x; else hi = x;
    const double slope = 1.0 + dh.real();
    double next = x - g / slope;
    if (!(slope > 0.0) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (std::abs(next - x) < 1e-16 || hi - lo < 1e-16) {
      x = next;
      break;
    }
    x = next;
  }
  return wraps + x;
}

}  // namespace detail

namespace serial {

void trig_eval(TrigSeries s, std::span<const double> points, std::span<cplx> out) {
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = detail::trig_point(s, points[i]);
}

void trig_eval_with_derivative(TrigSeries s, std::span<const double> points, std::span<cplx> value,
                               std::span<cplx> deriv) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    detail::trig_point_with_derivative(s, points[i], value[i], deriv[i]);
  }
}

void invert_lift(TrigSeries shift, std::span<const double> node_lift, std::span<const double> targets,
                 std::span<double> out) {
  for (std::size_t i = 0; i < targets.size(); ++i) out[i] = detail::invert_point(shift, node_lift, targets[i]);
}

}  // namespace serial

void trig_eval(TrigSeries s, std::span<const double> points, std::span<cplx> out, Exec exec) {
  if (exec == Exec::Parallel) omp::trig_eval(s, points, out);
  else serial::trig_eval(s, points, out);
}

void trig_eval_with_derivative(TrigSeries s, std::span<const double> points, std::span<cplx> value,
                               std::span<cplx> deriv, Exec exec) {
  if (exec == Exec::Parallel) omp::trig_eval_with_derivative(s, points, value, deriv);
  else serial::trig_eval_with_derivative(s, points, value, deriv);
}

void invert_lift(TrigSeries shift, std::span<const double> node_lift, std::span<const double> targets,
                 std::span<double> out, Exec exec) {
  if (exec == Exec::Parallel) omp::invert_lift(shift, node_lift, targets, out);
  else serial::invert_lift(shift, node_lift, targets, out);
}

}  // namespace hs2::kernels
