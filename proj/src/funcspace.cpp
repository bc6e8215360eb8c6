#include "hs2/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hs2/kernels.hpp"
#include "hs2/spectral.hpp"

namespace hs2 {
namespace {

using spectral::is_nyquist;
using spectral::wavenumber;

std::vector<cplx> coefficients(const RealFunction& f) { return spectral::forward(std::span<const double>(f.values())); }
std::vector<cplx> coefficients(const ComplexFunction& f) { return spectral::forward(std::span<const cplx>(f.values())); }

RealFunction real_from_coefficients(PeriodicGrid grid, const std::vector<cplx>& c) {
  const auto z = spectral::inverse(c);
  std::vector<double> v(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) v[j] = z[j].real();
  return RealFunction(grid, std::move(v));
}

// Multiplies every non-Nyquist mode by mult(k); mult(0) must be finite.
template <typename Mult>
std::vector<cplx> apply_multiplier(std::vector<cplx> c, Mult&& mult) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    auto& ci = c[static_cast<std::size_t>(i)];
    ci = is_nyquist(i, n) ? cplx(0.0) : ci * mult(wavenumber(i, n));
  }
  return c;
}

cplx derivative_symbol(int k) { return cplx(0.0, kTwoPi * k); }

cplx antiderivative_symbol(int k) { return k == 0 ? cplx(0.0) : 1.0 / derivative_symbol(k); }

RealFunction pin_at_zero(const RealFunction& g) {
  const double g0 = g[0];
  return g.map([g0](double v) { return v - g0; });
}

}  // namespace

PeriodicGrid::PeriodicGrid(int n) : n_(n) {
  if (n < 8 || n % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "grid size must be even and at least 8, got " + std::to_string(n));
  }
}

std::vector<double> PeriodicGrid::nodes() const {
  std::vector<double> x(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) x[static_cast<std::size_t>(j)] = node(j);
  return x;
}

RealFunction derivative(const RealFunction& f) {
  return real_from_coefficients(f.grid(), apply_multiplier(coefficients(f), derivative_symbol));
}

ComplexFunction derivative(const ComplexFunction& f) {
  return ComplexFunction(f.grid(), spectral::inverse(apply_multiplier(coefficients(f), derivative_symbol)));
}

double integrate(const RealFunction& f) {
  double s = 0.0;
  for (double v : f.values()) s += v;
  return s / f.size();
}

cplx integrate(const ComplexFunction& f) {
  cplx s = 0.0;
  for (cplx v : f.values()) s += v;
  return s / static_cast<double>(f.size());
}

RealFunction periodic_antiderivative(const RealFunction& f) {
  return pin_at_zero(real_from_coefficients(f.grid(), apply_multiplier(coefficients(f), antiderivative_symbol)));
}

RealFunction antiderivative_from_zero(const RealFunction& f) {
  const double m = integrate(f);
  const auto g = periodic_antiderivative(f);
  std::vector<double> v(g.values());
  for (int j = 0; j < f.size(); ++j) v[static_cast<std::size_t>(j)] += m * f.grid().node(j);
  return RealFunction(f.grid(), std::move(v));
}

RealFunction inverse_A(const RealFunction& f, double mean_tolerance) {
  const double m = integrate(f);
  if (std::abs(m) > mean_tolerance) {
    throw Error(ErrorKind::NonZeroMean, "inverse_A needs a zero-mean argument, mean = " + std::to_string(m));
  }
  auto symbol = [](int k) {
    if (k == 0) return cplx(0.0);
    const double w = kTwoPi * k;
    return cplx(1.0 / (w * w));
  };
  return pin_at_zero(real_from_coefficients(f.grid(), apply_multiplier(coefficients(f), symbol)));
}

RealFunction inverse_A_derivative(const RealFunction& f) {
  auto symbol = [](int k) { return k == 0 ? cplx(0.0) : cplx(0.0, 1.0 / (kTwoPi * k)); };
  return pin_at_zero(real_from_coefficients(f.grid(), apply_multiplier(coefficients(f), symbol)));
}

RealFunction mean_projection(const RealFunction& rho) {
  const double m = integrate(rho);
  return rho - m;
}

RealFunction dealiased_product(const RealFunction& a, const RealFunction& b) {
  a.require_same_grid(b);
  const int n = a.size();
  const int m = 3 * n / 2;
  auto pad = [n, m](const std::vector<cplx>& c) {
    std::vector<cplx> p(static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i) {
      if (is_nyquist(i, n)) continue;
      const int k = wavenumber(i, n);
      p[static_cast<std::size_t>(k >= 0 ? k : k + m)] = c[static_cast<std::size_t>(i)];
    }
    return spectral::inverse(p);
  };
  const auto pa = pad(coefficients(a));
  const auto pb = pad(coefficients(b));
  std::vector<cplx> prod(pa.size());
  for (std::size_t j = 0; j < prod.size(); ++j) prod[j] = cplx(pa[j].real() * pb[j].real(), 0.0);
  const auto pc = spectral::forward(std::span<const cplx>(prod));
  std::vector<cplx> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (is_nyquist(i, n)) continue;
    const int k = wavenumber(i, n);
    c[static_cast<std::size_t>(i)] = pc[static_cast<std::size_t>(k >= 0 ? k : k + m)];
  }
  return real_from_coefficients(a.grid(), c);
}

std::vector<cplx> interpolate(const ComplexFunction& f, std::span<const double> points) {
  const auto c = coefficients(f);
  std::vector<cplx> out(points.size());
  kernels::trig_eval({c}, points, out, kernels::Exec::Parallel);
  return out;
}

std::vector<double> interpolate(const RealFunction& f, std::span<const double> points) {
  const auto c = coefficients(f);
  std::vector<cplx> z(points.size());
  kernels::trig_eval({c}, points, z, kernels::Exec::Parallel);
  std::vector<double> out(points.size());
  std::transform(z.begin(), z.end(), out.begin(), [](cplx v) { return v.real(); });
  return out;
}

RealFunction real_part(const ComplexFunction& f) {
  return f.map([](cplx v) { return v.real(); });
}
RealFunction imag_part(const ComplexFunction& f) {
  return f.map([](cplx v) { return v.imag(); });
}
RealFunction modulus(const ComplexFunction& f) {
  return f.map([](cplx v) { return std::abs(v); });
}
ComplexFunction conjugate(const ComplexFunction& f) {
  return f.map([](cplx v) { return std::conj(v); });
}
ComplexFunction to_complex(const RealFunction& re) {
  return re.map([](double v) { return cplx(v, 0.0); });
}
ComplexFunction to_complex(const RealFunction& re, const RealFunction& im) {
  re.require_same_grid(im);
  std::vector<cplx> v(static_cast<std::size_t>(re.size()));
  for (int j = 0; j < re.size(); ++j) v[static_cast<std::size_t>(j)] = cplx(re[j], im[j]);
  return ComplexFunction(re.grid(), std::move(v));
}
RealFunction identity_function(PeriodicGrid grid) {
  return RealFunction::sample(grid, [](double x) { return x; });
}
RealFunction constant(PeriodicGrid grid, double value) { return RealFunction(grid, value); }

double max_abs(const RealFunction& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}
double max_abs(const ComplexFunction& f) {
  double m = 0.0;
  for (cplx v : f.values()) m = std::max(m, std::abs(v));
  return m;
}
double min_value(const RealFunction& f) { return *std::min_element(f.values().begin(), f.values().end()); }

double l2_inner(const ComplexFunction& x, const ComplexFunction& y) {
  x.require_same_grid(y);
  double s = 0.0;
  for (int j = 0; j < x.size(); ++j) s += (x[j] * std::conj(y[j])).real();
  return s / x.size();
}
double l2_inner(const RealFunction& x, const RealFunction& y) { return integrate(x * y); }
double l2_norm(const ComplexFunction& f) { return std::sqrt(l2_inner(f, f)); }
double l2_norm(const RealFunction& f) { return std::sqrt(l2_inner(f, f)); }

}  // namespace hs2
