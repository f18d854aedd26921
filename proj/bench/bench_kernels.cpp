// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <set>

#include "scld/constructions.hpp"
#include "scld/kernels.hpp"

using namespace scld;

namespace {

Code random_code(std::size_t M, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution bit(0.3);
    std::vector<std::vector<Symbol>> rows;
    std::set<std::vector<Symbol>> seen;
    while (rows.size() < M) {
        std::vector<Symbol> r(n);
        for (auto& s : r) s = bit(rng);
        if (seen.insert(r).second) rows.push_back(r);
    }
    return Code::from_rows(2, rows);
}

void BM_MaxResidual_Serial(benchmark::State& st) {
    const auto c = random_code(static_cast<std::size_t>(st.range(0)), 40, 1);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::reference::max_residual(c, 1, 3));
}

void BM_MaxResidual_Parallel(benchmark::State& st) {
    const auto c = random_code(static_cast<std::size_t>(st.range(0)), 40, 1);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::max_residual(c, 1, 3));
}

void BM_FindCollision_Serial(benchmark::State& st) {
    const auto c = x3_code(static_cast<std::uint32_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::reference::find_collision(c, 2));
}

void BM_FindCollision_Parallel(benchmark::State& st) {
    const auto c = x3_code(static_cast<std::uint32_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::find_collision(c, 2));
}

// Worst case for the subset search: evidence of the last pair in a wide residual.
struct SubsetFixture {
    Code code;
    CoalitionIndexSet candidates;
    EvidenceVector evidence;
};

SubsetFixture subset_fixture(std::size_t w) {
    auto code = random_code(w, 12, 3);
    std::vector<std::size_t> all(w);
    for (std::size_t i = 0; i < w; ++i) all[i] = i;
    auto evidence = desc(code, {w - 2, w - 1});
    return {std::move(code), CoalitionIndexSet(all), std::move(evidence)};
}

void BM_FirstMatch_Serial(benchmark::State& st) {
    const auto f = subset_fixture(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::reference::first_matching_subset(f.code, f.candidates, 2, f.evidence));
}

void BM_FirstMatch_Parallel(benchmark::State& st) {
    const auto f = subset_fixture(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::first_matching_subset(f.code, f.candidates, 2, f.evidence));
}

}  // namespace

BENCHMARK(BM_MaxResidual_Serial)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxResidual_Parallel)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindCollision_Serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindCollision_Parallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FirstMatch_Serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FirstMatch_Parallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
