#include <cstring>
#include <random>

#include "hs2/kernels.hpp"
#include "hs2/spectral.hpp"
#include "unit.hpp"

using namespace hs2;
using oracle::Trig;

namespace {

bool same_bits(std::span<const cplx> a, std::span<const cplx> b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(cplx)) == 0;
}

std::vector<double> random_points(std::mt19937_64& rng, int count) {
  std::uniform_real_distribution<double> u(-0.5, 1.5);
  std::vector<double> p(static_cast<std::size_t>(count));
  for (double& x : p) x = u(rng);
  return p;
}

}  // namespace

TEST_CASE("trig_eval matches the naive sum and the serial path bit for bit") {
  std::mt19937_64 rng(11);
  for (int n : {8, 64, 256}) {
    const auto t = Trig::random(rng, n / 2 - 1, 0.3);
    const auto c = spectral::forward(std::span<const double>(t.sample(n)));
    const auto pts = random_points(rng, 500);
    std::vector<cplx> s(pts.size()), p(pts.size());
    kernels::serial::trig_eval({c}, pts, s);
    kernels::omp::trig_eval({c}, pts, p);
    CHECK(same_bits(s, p));
    for (std::size_t i = 0; i < pts.size(); i += 37) {
      CHECK(std::abs(s[i] - oracle::trig_sum(c, pts[i])) < 1e-11);
      CHECK(s[i].real() == doctest::Approx(t(pts[i])).epsilon(1e-11));
    }
  }
}

TEST_CASE("Nyquist mode interpolates to real values") {
  const int n = 16;
  std::vector<double> alt(n);
  for (int j = 0; j < n; ++j) alt[static_cast<std::size_t>(j)] = j % 2 == 0 ? 1.0 : -1.0;
  const auto c = spectral::forward(std::span<const double>(alt));
  const std::vector<double> pts = {0.01, 0.3, 1.0 / 32};
  std::vector<cplx> out(pts.size());
  kernels::trig_eval({c}, pts, out, kernels::Exec::Serial);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(std::abs(out[i].imag()) < 1e-14);
    CHECK(out[i].real() == doctest::Approx(std::cos(oracle::kPi * n * pts[i])).epsilon(1e-13));
  }
}

TEST_CASE("trig_eval_with_derivative") {
  std::mt19937_64 rng(12);
  const int n = 128;
  const auto t = Trig::random(rng, 20, -0.2);
  const auto c = spectral::forward(std::span<const double>(t.sample(n)));
  const auto pts = random_points(rng, 300);
  std::vector<cplx> v1(pts.size()), d1(pts.size()), v2(pts.size()), d2(pts.size());
  kernels::trig_eval_with_derivative({c}, pts, v1, d1, kernels::Exec::Serial);
  kernels::trig_eval_with_derivative({c}, pts, v2, d2, kernels::Exec::Parallel);
  CHECK(same_bits(v1, v2));
  CHECK(same_bits(d1, d2));
  for (std::size_t i = 0; i < pts.size(); i += 17) {
    CHECK(v1[i].real() == doctest::Approx(t(pts[i])).epsilon(1e-11));
    CHECK(d1[i].real() == doctest::Approx(t.deriv(pts[i])).epsilon(1e-10));
  }
}

TEST_CASE("invert_lift solves x + h(x) = y in both back ends") {
  std::mt19937_64 rng(13);
  const int n = 256;
  auto st = Trig::random(rng, 5);
  st = st.scaled(0.8 / st.amplitude());
  auto shift = [&](double x) { return st.periodic_integral(x); };
  std::vector<double> h(n), lift(n);
  for (int j = 0; j < n; ++j) {
    h[static_cast<std::size_t>(j)] = shift(double(j) / n);
    lift[static_cast<std::size_t>(j)] = double(j) / n + h[static_cast<std::size_t>(j)];
  }
  const auto c = spectral::forward(std::span<const double>(h));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> targets(1000);
  for (double& y : targets) y = u(rng);
  std::vector<double> s(targets.size()), p(targets.size());
  kernels::serial::invert_lift({c}, lift, targets, s);
  kernels::omp::invert_lift({c}, lift, targets, p);
  CHECK(std::memcmp(s.data(), p.data(), s.size() * sizeof(double)) == 0);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    REQUIRE(std::abs(s[i] + shift(s[i]) - targets[i]) < 1e-12);
  }
}
