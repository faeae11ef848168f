#include <benchmark/benchmark.h>

#include "hellmann/curves.hpp"
#include "hellmann/envelope.hpp"
#include "hellmann/oracle.hpp"

using namespace hellmann;

static void EnvelopeEnergy(benchmark::State& state) {
    HellmannParams const p(2.0, 1.0, 1.0);
    QuantumNumbers const q(static_cast<int>(state.range(0)), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(envelope_energy(p, q));
    }
}
BENCHMARK(EnvelopeEnergy)->Arg(1)->Arg(3);

static void OptimalTangent(benchmark::State& state) {
    HellmannParams const p(2.0, -1.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_tangent_bound(p, {1, 0}));
    }
}
BENCHMARK(OptimalTangent);

static void SolveOnGrid(benchmark::State& state) {
    HellmannParams const p(2.0, 1.0, 1.0);
    QuantumNumbers const q(1, 0);
    RadialGrid const grid(1e-6 / 2.0, 40.0, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_on_grid(p, q, grid, 1e-8));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SolveOnGrid)->RangeMultiplier(4)->Range(5001, 320001)->Complexity()->Unit(benchmark::kMillisecond);

static void SolveEigenvalue(benchmark::State& state) {
    HellmannParams const p(2.0, state.range(0) == 0 ? -1.0 : 1.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_eigenvalue(p, {2, 0}));
    }
}
BENCHMARK(SolveEigenvalue)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void EnergyCurve(benchmark::State& state) {
    HellmannParams const p(2.0, 1.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(energy_curve(p, {1, 0}, 0.4, 5.0, 50));
    }
}
BENCHMARK(EnergyCurve);

BENCHMARK_MAIN();
