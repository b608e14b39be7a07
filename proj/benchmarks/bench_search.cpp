#include <benchmark/benchmark.h>

#include "k3lat/reflective.hpp"
#include "k3lat/search.hpp"

using namespace k3lat;

static void BM_StructuredSearch(benchmark::State& state) {
    const auto d = static_cast<std::uint64_t>(state.range(0));
    const auto c = static_cast<SearchCase>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(structured_search(d, c, {8, 10, 12, 14}));
}
BENCHMARK(BM_StructuredSearch)
    ->ArgsProduct({{60, 150}, {0, 1, 2, 3}})
    ->ArgNames({"d", "case"})
    ->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveSearch(benchmark::State& state) {
    const auto d = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search(d));
}
BENCHMARK(BM_ExhaustiveSearch)->Arg(40)->Arg(100)->Arg(150)->Unit(benchmark::kMillisecond);

static void BM_Verdict(benchmark::State& state) {
    const auto d = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kodaira_verdict(d).kind);
}
BENCHMARK(BM_Verdict)->Arg(5)->Arg(52)->Arg(150)->Unit(benchmark::kMillisecond);

static void BM_Pex(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(compute_Pex(240).size());
}
BENCHMARK(BM_Pex)->Unit(benchmark::kMillisecond);

static void BM_ReflK3(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reflK3_sample_check(6, 1000).reflective);
}
BENCHMARK(BM_ReflK3)->Unit(benchmark::kMillisecond);
