#include <benchmark/benchmark.h>

#include <cmath>

#include "ftsreg/ftsreg.hpp"

using namespace ftsreg;

namespace {

SimulatedPair make_pair(int T) {
  static const GridContext grid(32);
  return simulate_pair(ProcessSpec{}, grid, T, 42);
}

void BM_fdft(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  const SimulatedPair pair = make_pair(T);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fdft(pair.x));
  }
}
BENCHMARK(BM_fdft)->Arg(512)->Arg(4096);

void BM_smooth_spectrum(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  const SimulatedPair pair = make_pair(T);
  const DftStack stack = fdft(pair.x);
  const SmoothingKernel w = SmoothingKernel::epanechnikov();
  const double bandwidth = std::pow(static_cast<double>(T), -0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smooth_spectrum(stack, w, bandwidth));
  }
}
BENCHMARK(BM_smooth_spectrum)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_tikhonov_inverse(benchmark::State& state) {
  const GridContext grid(static_cast<int>(state.range(0)));
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Random(grid.m(), grid.m());
  const LinOp a(grid, Eigen::MatrixXcd(b * b.adjoint() / static_cast<double>(grid.m())));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tikhonov_inverse(a, 1e-2));
  }
}
BENCHMARK(BM_tikhonov_inverse)->Arg(16)->Arg(32)->Arg(64);

void BM_estimate_filter(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  const SimulatedPair pair = make_pair(T);
  const SmoothingKernel w = SmoothingKernel::epanechnikov();
  const TuningSchedule sched = schedule(2.0, 2.0, 0.25, T);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_filter(pair.x, pair.y, w, sched, 3));
  }
}
BENCHMARK(BM_estimate_filter)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_simulate_pair(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  const GridContext grid(32);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_pair(ProcessSpec{}, grid, T, ++seed));
  }
}
BENCHMARK(BM_simulate_pair)->Arg(4096);

} // namespace

BENCHMARK_MAIN();
