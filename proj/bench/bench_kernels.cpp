// Serial reference vs OpenMP kernels for composition and inversion.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hs2/diffeo.hpp"
#include "hs2/kernels.hpp"
#include "hs2/spectral.hpp"

namespace {

using hs2::kernels::Exec;

struct Fixture {
  std::vector<hs2::cplx> coeffs;
  std::vector<double> lift;
  std::vector<double> points;

  explicit Fixture(int n) {
    const hs2::PeriodicGrid grid(n);
    const auto shift = hs2::RealFunction::sample(
        grid, [](double x) { return 0.05 * std::sin(hs2::kTwoPi * x) + 0.02 * std::sin(3 * hs2::kTwoPi * x); });
    const auto phi = hs2::Diffeo::from_shift(shift);
    coeffs = hs2::spectral::forward(std::span<const double>(shift.values()));
    lift = phi.lift().values();
    points = grid.nodes();
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> jitter(0.0, 1.0 / n);
    for (auto& p : points) p += jitter(rng);
  }
};

void BM_TrigEval(benchmark::State& state, Exec exec) {
  const Fixture f(static_cast<int>(state.range(0)));
  std::vector<hs2::cplx> out(f.points.size());
  for (auto _ : state) {
    hs2::kernels::trig_eval({f.coeffs}, f.points, out, exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.points.size()));
}

void BM_InvertLift(benchmark::State& state, Exec exec) {
  const Fixture f(static_cast<int>(state.range(0)));
  std::vector<double> out(f.points.size());
  for (auto _ : state) {
    hs2::kernels::invert_lift({f.coeffs}, f.lift, f.points, out, exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.points.size()));
}

BENCHMARK_CAPTURE(BM_TrigEval, serial, Exec::Serial)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK_CAPTURE(BM_TrigEval, omp, Exec::Parallel)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK_CAPTURE(BM_InvertLift, serial, Exec::Serial)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK_CAPTURE(BM_InvertLift, omp, Exec::Parallel)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace

BENCHMARK_MAIN();
