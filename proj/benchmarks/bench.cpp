#include <benchmark/benchmark.h>

#include "invstab/char_sums.hpp"
#include "invstab/dynamics.hpp"
#include "invstab/irreducibility.hpp"
#include "invstab/stability.hpp"

using namespace invstab;

static void BM_pair_cycle_scan(benchmark::State& state) {
    const FieldCtx F = FieldCtx::prime(65537);
    const FieldElem c = F.from_int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pair_cycle_scan(F, 2, c));
}
BENCHMARK(BM_pair_cycle_scan)->Arg(3)->Arg(12345);

static void BM_decide_fq(benchmark::State& state) {
    const FieldCtx F = FieldCtx::prime(65537);
    const FieldElem c = F.from_int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(decide_fq(F, 2, c));
}
BENCHMARK(BM_decide_fq)->Arg(3)->Arg(12345);

static void BM_rabin_degree64(benchmark::State& state) {
    const FieldCtx F = FieldCtx::prime(17);
    const FqRing r(F);
    const auto it = iterate_phi(r, 4, F.from_int(5), 3);  // deg 64
    for (auto _ : state) benchmark::DoNotOptimize(rabin_irreducible(F, it.g));
}
BENCHMARK(BM_rabin_degree64);

static void BM_iterate_phi_q(benchmark::State& state) {
    const RatRing Q;
    for (auto _ : state)
        benchmark::DoNotOptimize(iterate_phi(Q, 2, Rat(3), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_iterate_phi_q)->Arg(3)->Arg(4);

static void BM_family_enumeration(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_stable_family(257, false));
}
BENCHMARK(BM_family_enumeration);

BENCHMARK_MAIN();
