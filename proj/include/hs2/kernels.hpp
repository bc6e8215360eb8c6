#pragma once

// Hot loops behind composition and diffeomorphism inversion. Each kernel has
// a serial reference and an OpenMP version that must produce identical bits
// (every output slot is computed independently, so there is no reduction
// order to disagree on).

#include <complex>
#include <span>

namespace hs2::kernels {

using cplx = std::complex<double>;

enum class Exec { Serial, Parallel };

/// Fourier coefficients as produced by spectral::forward; the Nyquist slot is
/// evaluated as c * cos(pi n y) so real data interpolates to real values.
struct TrigSeries {
  std::span<const cplx> coeffs;
};

/// out[i] = sum_k c_k exp(2 pi i k y_i).
void trig_eval(TrigSeries s, std::span<const double> points, std::span<cplx> out, Exec exec);

/// Value and first derivative of the interpolant at each point.
void trig_eval_with_derivative(TrigSeries s, std::span<const double> points, std::span<cplx> value,
                               std::span<cplx> deriv, Exec exec);

/// Solves x + h(x) = y_i for each target, where h is the (real) periodic
/// interpolant with coefficients `shift`. `node_lift` holds x_j + h(x_j) on
/// the grid and is used to bracket every root before safeguarded Newton.
void invert_lift(TrigSeries shift, std::span<const double> node_lift, std::span<const double> targets,
                 std::span<double> out, Exec exec);

namespace serial {
void trig_eval(TrigSeries s, std::span<const double> points, std::span<cplx> out);
void trig_eval_with_derivative(TrigSeries s, std::span<const double> points, std::span<cplx> value,
                               std::span<cplx> deriv);
void invert_lift(TrigSeries shift, std::span<const double> node_lift, std::span<const double> targets,
                 std::span<double> out);
}  // namespace serial

namespace omp {
void trig_eval(TrigSeries s, std::span<const double> points, std::span<cplx> out);
void trig_eval_with_derivative(TrigSeries s, std::span<const double> points, std::span<cplx> value,
                               std::span<cplx> deriv);
void invert_lift(TrigSeries shift, std::span<const double> node_lift, std::span<const double> targets,
                 std::span<double> out);
}  // namespace omp

// Per-point primitives shared by both back ends.
namespace detail {
cplx trig_point(TrigSeries s, double y);
void trig_point_with_derivative(TrigSeries s, double y, cplx& value, cplx& deriv);
double invert_point(TrigSeries shift, std::span<const double> node_lift, double target);
}  // namespace detail

}  // namespace hs2::kernels
