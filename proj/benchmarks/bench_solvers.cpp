#include <benchmark/benchmark.h>

#include "segcover/generate.hpp"
#include "segcover/lp.hpp"
#include "segcover/strip_greedy.hpp"
#include "segcover/sweep_cover.hpp"

namespace {

using namespace segcover;

void GreedyStrip(benchmark::State& state) {
    GenOptions options;
    options.bbox = std::max<std::int64_t>(4, state.range(0) / 100);
    const Instance instance =
        gen_random(ClassTag::H1US, static_cast<std::size_t>(state.range(0)), 7, options);
    const StripInstance strip{Rational(0), instance.segments};
    for (auto _ : state) {
        Cover cover = greedy_strip_cover(strip);
        benchmark::DoNotOptimize(cover.squares.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(GreedyStrip)->RangeMultiplier(10)->Range(100, 100000)->Complexity()
    ->Unit(benchmark::kMillisecond);

void Hv1ThreeApprox(benchmark::State& state) {
    GenOptions options;
    options.bbox = std::max<std::int64_t>(4, state.range(0) / 100);
    const Instance instance =
        gen_random(ClassTag::HV1, static_cast<std::size_t>(state.range(0)), 7, options);
    for (auto _ : state) {
        SweepResult result = hv1_three_approx(instance.segments);
        benchmark::DoNotOptimize(result.cover.squares.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(Hv1ThreeApprox)->RangeMultiplier(10)->Range(100, 100000)->Complexity()
    ->Unit(benchmark::kMillisecond);

void ArbSixApprox(benchmark::State& state) {
    GenOptions options;
    options.bbox = std::max<std::int64_t>(4, state.range(0) / 100);
    const Instance instance =
        gen_random(ClassTag::Arb, static_cast<std::size_t>(state.range(0)), 7, options);
    for (auto _ : state) {
        SweepResult result = arb_six_approx(instance.segments);
        benchmark::DoNotOptimize(result.cover.squares.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(ArbSixApprox)->RangeMultiplier(10)->Range(100, 10000)->Complexity()
    ->Unit(benchmark::kMillisecond);

void CoveringLp(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(11);
    LinearProgram lp;
    lp.objective.assign(n, Rational(1));
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<Rational> row(n, Rational(0));
        for (std::size_t hits = 0; hits < 3; ++hits) row[rng.bounded(n)] = 1;
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(Rational(1));
    }
    for (auto _ : state) {
        LinearSolution sol = solve_lp(lp);
        benchmark::DoNotOptimize(sol.objective.get_num().get_mpz_t());
    }
}
BENCHMARK(CoveringLp)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
