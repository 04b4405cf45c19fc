#include <benchmark/benchmark.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fsb/bath.hpp"
#include "fsb/floquet.hpp"
#include "fsb/sweep.hpp"

namespace {

fsb::SystemParams params() {
    fsb::SystemParams s;
    s.h_z1 = 1.7 * s.omega;
    s.theta = fsb::kPi / 4;
    return s;
}

void BM_Propagate(benchmark::State& state) {
    const auto s = params();
    for (auto _ : state) benchmark::DoNotOptimize(fsb::propagate_period(s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Propagate)->Arg(1024)->Arg(2048)->Arg(4096);

void BM_FourierKernel(benchmark::State& state) {
    const auto sol = fsb::solve_floquet(params(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fsb::fourier_coefficients(sol, fsb::kPi / 4, 3));
}
BENCHMARK(BM_FourierKernel)->Arg(2048)->Arg(8192);

void BM_FourierReference(benchmark::State& state) {
    const auto sol = fsb::solve_floquet(params(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fsb::reference::fourier_coefficients(sol, fsb::kPi / 4, 3));
}
BENCHMARK(BM_FourierReference)->Arg(2048)->Arg(8192);

fsb::SweepSpec grid(std::size_t n) {
    fsb::SweepSpec spec;
    spec.axis1 = fsb::Axis{"h_z1_over_omega", 0.0, 6.0, n};
    spec.axis2 = fsb::Axis{"theta", 0.0, fsb::kPi / 2, 4};
    return spec;
}

void BM_SweepSerial(benchmark::State& state) {
    const auto spec = grid(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fsb::run_sweep_serial(spec));
}
BENCHMARK(BM_SweepSerial)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
    const auto spec = grid(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fsb::run_sweep(spec));
#ifdef _OPENMP
    state.counters["threads"] = omp_get_max_threads();
#endif
}
BENCHMARK(BM_SweepParallel)->Arg(16)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
