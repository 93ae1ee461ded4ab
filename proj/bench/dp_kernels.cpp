#include "domvar/cover_dp.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace domvar;

CoverInstance random_scp(int universe, int family, int blocks, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CoverInstance inst;
    inst.universe_size = universe;
    const ElementMask all = (ElementMask{1} << universe) - 1;
    for (int j = 0; j < family; ++j) inst.family.push_back(static_cast<ElementMask>(rng()) & all);
    for (int b = 0; b < blocks; ++b) {
        inst.block_sizes.push_back(family / blocks + (b < family % blocks ? 1 : 0));
        inst.block_requirement.push_back(static_cast<int>(rng() & 1u));
    }
    return inst;
}

CoverInstance random_wsmp(int universe, int family, int blocks, int r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CoverInstance inst = random_scp(universe, family, blocks, seed);
    inst.block_mode = BlockMode::AtLeastWeight;
    inst.cover_mode = CoverMode::Multicover;
    inst.max_weight = r;
    for (int &w : inst.block_requirement) w = static_cast<int>(rng() % static_cast<std::uint64_t>(r + 1));
    for (int u = 0; u < universe; ++u) inst.element_weight.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(r + 1)));
    return inst;
}

void BM_scp_reference(benchmark::State &state) {
    const CoverInstance inst = random_scp(static_cast<int>(state.range(0)), 24, 6, 7);
    for (auto _ : state) benchmark::DoNotOptimize(reference::solve_scp(inst));
    state.SetComplexityN(state.range(0));
}

void BM_scp_parallel(benchmark::State &state) {
    const CoverInstance inst = random_scp(static_cast<int>(state.range(0)), 24, 6, 7);
    for (auto _ : state) benchmark::DoNotOptimize(solve_scp(inst));
    state.SetComplexityN(state.range(0));
}

void BM_wsmp_reference(benchmark::State &state) {
    const CoverInstance inst = random_wsmp(static_cast<int>(state.range(0)), 16, 4, 2, 11);
    for (auto _ : state) benchmark::DoNotOptimize(reference::solve_wsmp(inst));
}

void BM_wsmp_parallel(benchmark::State &state) {
    const CoverInstance inst = random_wsmp(static_cast<int>(state.range(0)), 16, 4, 2, 11);
    for (auto _ : state) benchmark::DoNotOptimize(solve_wsmp(inst));
}

} // namespace

BENCHMARK(BM_scp_reference)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scp_parallel)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wsmp_reference)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wsmp_parallel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
