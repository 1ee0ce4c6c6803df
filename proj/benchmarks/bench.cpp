#include <random>

#include <benchmark/benchmark.h>

#include "specseq/operations.hpp"

using namespace specseq;

namespace {

F2Matrix random_matrix(int n, int m, std::mt19937& rng) {
    F2Matrix a(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            if (rng() & 1) a.set(i, j);
    return a;
}

void BM_rank(benchmark::State& state) {
    std::mt19937 rng(12345);
    int n = (int)state.range(0);
    F2Matrix a = random_matrix(n, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_rank)->Arg(64)->Arg(256)->Arg(1024);

void BM_kernel(benchmark::State& state) {
    std::mt19937 rng(54321);
    int n = (int)state.range(0);
    F2Matrix a = random_matrix(n / 2, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(a));
}
BENCHMARK(BM_kernel)->Arg(256)->Arg(1024);

void BM_conormalize(benchmark::State& state) {
    Cosimplicial d = universal_example(2, 1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(conormalize(d));
}
BENCHMARK(BM_conormalize);

void BM_orbit_conorm(benchmark::State& state) {
    Cosimplicial d = universal_example((int)state.range(0), 1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(orbit_conorm(d, 5));
}
BENCHMARK(BM_orbit_conorm)->Arg(2)->Arg(3);

void BM_orbit_e2_entry(benchmark::State& state) {
    Cosimplicial d = universal_example(2, 1, 1);
    for (auto _ : state) {
        OrbitPipeline op(d, 5);
        benchmark::DoNotOptimize(op.ss->entry(2, 1, 2).dim);
    }
}
BENCHMARK(BM_orbit_e2_entry);

}  // namespace

BENCHMARK_MAIN();
