#include <benchmark/benchmark.h>
#include <omp.h>

#include "elasto/boundary.hpp"
#include "elasto/numerics.hpp"
#include "elasto/verify.hpp"

using namespace elasto;

namespace {

const Params kParams(1.0);
const State kBoundary{2, 0};
const State kInitial{0, 0};

ViscousConfig viscous_config(int nx) {
  ViscousConfig c;
  c.epsilon = 0.01;
  c.x_max = 2.5;
  c.nx = nx;
  c.t_end = 0.25;
  return c;
}

WeakGrid weak_grid(int n) {
  WeakGrid g;
  g.x_max = 2.0;
  g.nx = 2 * n;
  g.nt = n;
  return g;
}

void BM_ViscousParallel(benchmark::State& state) {
  const auto cfg = viscous_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(viscous_solve(kBoundary, kInitial, kParams, cfg));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_ViscousSerial(benchmark::State& state) {
  const auto cfg = viscous_config(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(viscous_solve_serial(kBoundary, kInitial, kParams, cfg));
}

void BM_WeakParallel(benchmark::State& state) {
  const auto sol = solve_ibvp(kBoundary, kInitial, kParams);
  const auto g = weak_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weak_residual(sol.structure, kParams, g));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_WeakSerial(benchmark::State& state) {
  const auto sol = solve_ibvp(kBoundary, kInitial, kParams);
  const auto g = weak_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weak_residual_serial(sol.structure, kParams, g));
}

}  // namespace

BENCHMARK(BM_ViscousParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ViscousSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeakParallel)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeakSerial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
