#pragma once

// Sampled periodic functions on the unit-length circle and their spectral
// calculus. Every function lives on a uniform grid x_j = j/n; spectral
// operations (derivative, antiderivative, A^{-1}) drop the Nyquist mode.

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "hs2/error.hpp"

namespace hs2 {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

class PeriodicGrid {
 public:
  static constexpr int kDefaultSize = 256;

  explicit PeriodicGrid(int n = kDefaultSize);

  int size() const noexcept { return n_; }
  double spacing() const noexcept { return 1.0 / n_; }
  double node(int j) const noexcept { return static_cast<double>(j) / n_; }
  std::vector<double> nodes() const;

  friend bool operator==(const PeriodicGrid&, const PeriodicGrid&) = default;

 private:
  int n_;
};

/// Samples of a real or complex function on a PeriodicGrid. Immutable once
/// built; all arithmetic returns new values.
template <typename T>
class PeriodicFunction {
 public:
  using value_type = T;

  explicit PeriodicFunction(PeriodicGrid grid, T fill = T{})
      : grid_(grid), values_(static_cast<std::size_t>(grid.size()), fill) {}

  PeriodicFunction(PeriodicGrid grid, std::vector<T> values) : grid_(grid), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.size()) {
      throw Error(ErrorKind::InvalidArgument, "sample count does not match grid size");
    }
  }

  template <typename F>
  static PeriodicFunction sample(PeriodicGrid grid, F&& fn) {
    std::vector<T> v(static_cast<std::size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) v[static_cast<std::size_t>(j)] = static_cast<T>(fn(grid.node(j)));
    return PeriodicFunction(grid, std::move(v));
  }

  const PeriodicGrid& grid() const noexcept { return grid_; }
  int size() const noexcept { return grid_.size(); }
  const std::vector<T>& values() const noexcept { return values_; }
  const T& operator[](int j) const { return values_[static_cast<std::size_t>(j)]; }

  template <typename F>
  auto map(F&& fn) const {
    using R = std::decay_t<decltype(fn(values_[0]))>;
    std::vector<R> out(values_.size());
    for (std::size_t j = 0; j < values_.size(); ++j) out[j] = fn(values_[j]);
    return PeriodicFunction<R>(grid_, std::move(out));
  }

  template <typename F>
  PeriodicFunction zip(const PeriodicFunction& other, F&& fn) const {
    require_same_grid(other);
    std::vector<T> out(values_.size());
    for (std::size_t j = 0; j < values_.size(); ++j) out[j] = fn(values_[j], other.values_[j]);
    return PeriodicFunction(grid_, std::move(out));
  }

  void require_same_grid(const PeriodicFunction& other) const {
    if (!(grid_ == other.grid_)) throw Error(ErrorKind::InvalidArgument, "grid mismatch");
  }

  friend PeriodicFunction operator+(const PeriodicFunction& a, const PeriodicFunction& b) {
    return a.zip(b, [](T x, T y) { return x + y; });
  }
  friend PeriodicFunction operator-(const PeriodicFunction& a, const PeriodicFunction& b) {
    return a.zip(b, [](T x, T y) { return x - y; });
  }
  friend PeriodicFunction operator*(const PeriodicFunction& a, const PeriodicFunction& b) {
    return a.zip(b, [](T x, T y) { return x * y; });
  }
  friend PeriodicFunction operator/(const PeriodicFunction& a, const PeriodicFunction& b) {
    return a.zip(b, [](T x, T y) { return x / y; });
  }
  friend PeriodicFunction operator*(T s, const PeriodicFunction& a) {
    return a.map([s](T x) { return s * x; });
  }
  friend PeriodicFunction operator*(const PeriodicFunction& a, T s) { return s * a; }
  friend PeriodicFunction operator+(const PeriodicFunction& a, T s) {
    return a.map([s](T x) { return x + s; });
  }
  friend PeriodicFunction operator-(const PeriodicFunction& a, T s) {
    return a.map([s](T x) { return x - s; });
  }
  friend PeriodicFunction operator-(const PeriodicFunction& a) {
    return a.map([](T x) { return -x; });
  }

 private:
  PeriodicGrid grid_;
  std::vector<T> values_;
};

using RealFunction = PeriodicFunction<double>;
using ComplexFunction = PeriodicFunction<cplx>;

// ---- spectral calculus -----------------------------------------------------

RealFunction derivative(const RealFunction& f);
ComplexFunction derivative(const ComplexFunction& f);

/// Trapezoid rule on the periodic grid: (1/n) * sum of samples.
double integrate(const RealFunction& f);
cplx integrate(const ComplexFunction& f);

/// F(x) = int_0^x f dy: spectral integral of the zero-mean part plus
/// mean(f) * x. The result is not periodic unless mean(f) = 0.
RealFunction antiderivative_from_zero(const RealFunction& f);

/// Spectral integral of the zero-mean part of f, pinned to 0 at x = 0.
/// Periodic by construction; mean(f) is discarded.
RealFunction periodic_antiderivative(const RealFunction& f);

/// (A^{-1} f)(x) with A = -d^2/dx^2 on functions vanishing at 0.
/// Throws NonZeroMean if |mean(f)| exceeds `mean_tolerance`.
RealFunction inverse_A(const RealFunction& f, double mean_tolerance = 1e-10);

/// A^{-1} d/dx f = -int_0^x f + x int f, valid for any f.
RealFunction inverse_A_derivative(const RealFunction& f);

/// rho - mean(rho): orthogonal projection onto zero-mean functions.
RealFunction mean_projection(const RealFunction& rho);

/// a * b computed on a zero-padded grid of 3n/2 points and truncated back to
/// |k| < n/2, so no product mode aliases onto a retained one.
RealFunction dealiased_product(const RealFunction& a, const RealFunction& b);

/// Evaluates the trigonometric interpolant of f at arbitrary points.
std::vector<double> interpolate(const RealFunction& f, std::span<const double> points);
std::vector<cplx> interpolate(const ComplexFunction& f, std::span<const double> points);

// ---- pointwise helpers -------------------------------------------------------

RealFunction real_part(const ComplexFunction& f);
RealFunction imag_part(const ComplexFunction& f);
RealFunction modulus(const ComplexFunction& f);
ComplexFunction conjugate(const ComplexFunction& f);
ComplexFunction to_complex(const RealFunction& re);
ComplexFunction to_complex(const RealFunction& re, const RealFunction& im);
RealFunction identity_function(PeriodicGrid grid);
RealFunction constant(PeriodicGrid grid, double value);

double max_abs(const RealFunction& f);
double max_abs(const ComplexFunction& f);
double min_value(const RealFunction& f);

/// L^2 pairing Re int X conj(Y) dx.
double l2_inner(const ComplexFunction& x, const ComplexFunction& y);
double l2_inner(const RealFunction& x, const RealFunction& y);
double l2_norm(const ComplexFunction& f);
double l2_norm(const RealFunction& f);

}  // namespace hs2
