#include "necklace/experiments.hpp"
#include "necklace/spectral.hpp"
#include "necklace/twist.hpp"

#include <benchmark/benchmark.h>

using namespace necklace;

namespace {

void BM_root_build(benchmark::State& state) {
    NecklaceConfig cfg = NecklaceConfig::make(state.range(0), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(necklace_root_matrix(cfg, 1, 1));
    }
}
BENCHMARK(BM_root_build)->Arg(2)->Arg(4)->Arg(8);

void BM_psi_power(benchmark::State& state) {
    NecklaceConfig cfg = NecklaceConfig::make(state.range(0), 2);
    CurveMatrix root = necklace_root_matrix(cfg, 1, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(root.pow(cfg.m * cfg.n));
    }
}
BENCHMARK(BM_psi_power)->Arg(2)->Arg(4)->Arg(8);

void BM_perron_psi(benchmark::State& state) {
    NecklaceConfig cfg = NecklaceConfig::make(state.range(0), 2);
    CurveMatrix psi = psi_matrix(cfg, 1, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(perron(psi, 1e-10, 30'000'000));
    }
}
BENCHMARK(BM_perron_psi)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_determinant(benchmark::State& state) {
    NecklaceConfig cfg = NecklaceConfig::make(state.range(0), 2);
    CurveMatrix psi = psi_matrix(cfg, 1, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(psi.determinant());
    }
}
BENCHMARK(BM_determinant)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_sweep_small(benchmark::State& state) {
    SweepConfig cfg;
    cfg.m_min = 2;
    cfg.m_max = state.range(0);
    cfg.tol = 1e-11;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep(cfg));
    }
}
BENCHMARK(BM_sweep_small)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
