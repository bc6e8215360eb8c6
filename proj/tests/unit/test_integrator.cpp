#include <cmath>
#include <random>

#include "hs2/integrator.hpp"
#include "unit.hpp"

using namespace hs2;
using oracle::kPi;
using oracle::Trig;

namespace {

const PeriodicGrid grid(256);

TangentVector state(const Trig& u0x, const Trig& rho) {
  const auto d = support::data(grid, u0x, rho);
  return {d.u0, d.rho0};
}

Trig random_zero_mean(std::mt19937_64& rng, int modes, double amplitude) {
  auto t = Trig::random(rng, modes);
  return t.scaled(amplitude / t.amplitude());
}

}  // namespace

TEST_CASE("rhs vanishes at the stationary state") {
  const auto r = rhs(state(Trig{}, Trig{2.0, {}, {}}));
  CHECK(max_abs(r.u1) < 1e-14);
  CHECK(max_abs(r.u2) < 1e-14);
}

TEST_CASE("rhs for u = 0, rho = cos 2 pi x") {
  // d_x cos^2 = -2 pi sin 4 pi x, whose A^{-1} is -sin(4 pi x)/(8 pi).
  for (bool dealias : {true, false}) {
    const auto r = rhs(state(Trig{}, Trig{0.0, {1.0}, {}}), dealias);
    CHECK(support::max_abs_diff(r.u1, RealFunction::sample(grid, [](double x) { return std::sin(2 * kTwoPi * x) / (16.0 * kPi); })) <
          1e-14);
    CHECK(max_abs(r.u2) < 1e-14);
  }
}

TEST_CASE("rhs preserves u(0) = 0") {
  std::mt19937_64 rng(51);
  const auto u0x = random_zero_mean(rng, 5, 1.0);
  const auto r = rhs(state(u0x, Trig::random(rng, 5, 0.4)));
  CHECK(std::abs(r.u1[0]) < 1e-14);
}

TEST_CASE("rhs applied to an exact solution is its time derivative") {
  std::mt19937_64 rng(52);
  const PeriodicGrid fine(512);
  for (int i = 0; i < 3; ++i) {
    const auto u0x = random_zero_mean(rng, 3, 1.0);
    const auto rho = Trig::random(rng, 3, i == 0 ? 1.5 : 0.2);
    const auto d = support::data(fine, u0x, rho);
    const double t = std::min(0.7, 0.5 * blowup_time(d).T), h = 1e-3;
    auto at = [&](double dt) { return exact_solution(d, t + dt); };
    const auto m2 = at(-2 * h), m1 = at(-h), p1 = at(h), p2 = at(2 * h);
    const double w = 1.0 / (12.0 * h);
    const auto u_t = (m2.u1 - 8.0 * m1.u1 + 8.0 * p1.u1 - p2.u1) * w;
    const auto rho_t = (m2.u2 - 8.0 * m1.u2 + 8.0 * p1.u2 - p2.u2) * w;
    const auto r = rhs(at(0.0));
    CHECK(support::max_abs_diff(r.u1, u_t) < 1e-7);
    CHECK(support::max_abs_diff(r.u2, rho_t) < 1e-7);
  }
}

TEST_CASE("rhs_restricted") {
  std::mt19937_64 rng(53);
  const auto u0x = random_zero_mean(rng, 4, 1.0);
  // Constant rho drops out entirely: the Hunter-Saxton right side remains.
  const auto hs = rhs_restricted(state(u0x, Trig{0.8, {}, {}}));
  const auto bare = rhs(state(u0x, Trig{}));
  CHECK(support::max_abs_diff(hs.u1, bare.u1) < 1e-14);
  CHECK(max_abs(hs.u2) < 1e-14);

  const auto rho = Trig::random(rng, 4, 0.9);
  const auto r = rhs_restricted(state(u0x, rho));
  CHECK(std::abs(integrate(r.u2)) < 1e-15);

  auto zero_mean = rho;
  zero_mean.mean = 0.0;
  const auto a = rhs_restricted(state(u0x, zero_mean)), b = rhs(state(u0x, zero_mean));
  CHECK(support::max_abs_diff(a.u1, b.u1) < 1e-14);
  CHECK(support::max_abs_diff(a.u2, b.u2) < 1e-12);
}

TEST_CASE("energy is c^2") {
  const Trig u0x{0.0, {}, {1.0}}, rho{1.5, {1.0}, {}};
  CHECK(energy(state(u0x, rho)) == doctest::Approx(0.8125).epsilon(1e-14));
  // Restricted energy uses the zero-mean part of rho: 1/4 (1/2 + 1/2).
  CHECK(energy(state(u0x, rho), true) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("config validation") {
  for (auto bad : {IntegratorConfig{.dt = 0.0}, IntegratorConfig{.t_end = -1.0}, IntegratorConfig{.record_every = 0},
                   IntegratorConfig{.blowup_threshold = 0.0}}) {
    expect_error([&] { bad.validate(); }, ErrorKind::InvalidArgument);
  }
  CHECK_NOTHROW(IntegratorConfig{}.validate());
}

TEST_CASE("stationary data stays put") {
  const auto d = support::data(grid, Trig{}, Trig{2.0, {}, {}});
  const auto tr = integrate(d, {.dt = 1e-2, .t_end = 1.0});
  CHECK_FALSE(tr.halted);
  CHECK(tr.times.back() == doctest::Approx(1.0));
  for (const auto& s : tr.states) {
    CHECK(max_abs(s.u1) < 1e-12);
    CHECK(support::max_abs_diff(s.u2, constant(grid, 2.0)) < 1e-12);
  }
}

TEST_CASE("smooth global data matches the exact solution") {
  const auto d = support::data(grid, Trig{0.0, {}, {1.0}}, Trig{1.5, {1.0}, {}});
  const auto tr = integrate(d, {.dt = 5e-4, .t_end = 1.0, .record_every = 1000});
  REQUIRE(tr.times.size() == 3);
  const auto exact = exact_solution(d, 1.0);
  CHECK(support::relative_l2(exact.u1, tr.states.back().u1) < 1e-6);
  CHECK(support::relative_l2(exact.u2, tr.states.back().u2) < 1e-6);
  for (const auto& s : tr.states) CHECK(s.u1[0] == 0.0);
  for (const auto& e : tr.log) {
    CHECK(e.energy == doctest::Approx(0.8125).epsilon(1e-8));
    CHECK(std::abs(e.mean_rho - 1.5) < 1e-10);
  }
}

TEST_CASE("restricted flow keeps rho at zero mean") {
  std::mt19937_64 rng(54);
  const auto u0x = random_zero_mean(rng, 3, 0.5);
  const auto d = support::data(grid, u0x, Trig::random(rng, 3, 1.2));
  const auto tr = integrate(d, {.dt = 1e-3, .t_end = 0.3, .record_every = 50, .restricted = true});
  for (const auto& s : tr.states) CHECK(std::abs(integrate(s.u2)) < 1e-15);
}

TEST_CASE("integration halts once sup|u_x| crosses the threshold") {
  // u0x = cos 2 pi x, rho0 = 0 steepens until T = 1.7408... The front is
  // compressed by |f|^2, so sup|u_x| = 5 needs n = 1024 to be read off
  // pointwise to four digits.
  const auto d = support::data(PeriodicGrid(1024), Trig{0.0, {1.0}, {}}, Trig{});
  const double T = blowup_time(d).T;
  const auto tr = integrate(d, {.dt = 1e-3, .t_end = T + 0.1, .blowup_threshold = 5.0});
  CHECK(tr.halted);
  CHECK(tr.last_stable_time < T);
  // The crossing step is logged last; the one before it is the last stable state.
  REQUIRE(tr.log.size() >= 2);
  CHECK(tr.log.back().sup_ux > 5.0);
  CHECK(tr.log[tr.log.size() - 2].sup_ux <= 5.0);
  CHECK(tr.log[tr.log.size() - 2].t == tr.last_stable_time);
  // Along characteristics u_x o phi = Re(2 f_t / f) with
  // f = cos ct + u0x sin ct / 2c, so sup|u_x| is known in closed form.
  const double c = 1.0 / (2.0 * std::sqrt(2.0));
  auto sup_ux = [&](double t) {
    double m = 0.0;
    for (int j = 0; j < 4096; ++j) {
      const double a = std::cos(kTwoPi * j / 4096.0);
      const double f = std::cos(c * t) + a * std::sin(c * t) / (2.0 * c);
      const double ft = -c * std::sin(c * t) + a * std::cos(c * t) / 2.0;
      m = std::max(m, std::abs(2.0 * ft / f));
    }
    return m;
  };
  double lo = 0.0, hi = T;
  for (int k = 0; k < 60; ++k) {
    const double mid = 0.5 * (lo + hi);
    (sup_ux(mid) > 5.0 ? hi : lo) = mid;
  }
  CHECK(tr.last_stable_time <= hi);
  CHECK(tr.last_stable_time > hi - 1e-3);
}
