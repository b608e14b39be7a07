#include <benchmark/benchmark.h>

#include "k3lat/e8.hpp"
#include "k3lat/lattice_expr.hpp"
#include "k3lat/qseries.hpp"
#include "k3lat/roots.hpp"
#include "k3lat/smith.hpp"

using namespace k3lat;

static void BM_EnumerateNormE8(benchmark::State& state) {
    const IntLattice& l = e8::lattice();
    const Int n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(count_norm_vectors(l, n));
    state.SetLabel("norm " + n.get_str());
}
BENCHMARK(BM_EnumerateNormE8)->Arg(2)->Arg(8)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_EnumerateRoots(benchmark::State& state) {
    const IntLattice l = parse_lattice_expr("E8");
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_roots(l).count);
}
BENCHMARK(BM_EnumerateRoots)->Unit(benchmark::kMillisecond);

static void BM_OrthRootCount(benchmark::State& state) {
    const IntLattice& l = e8::lattice();
    const LatVec x = e8::from_doubled({0, 0, 2, 2, 4, 4, 18, -2});
    count_orth_roots(l, x);
    for (auto _ : state) benchmark::DoNotOptimize(count_orth_roots(l, x));
}
BENCHMARK(BM_OrthRootCount);

static void BM_ThetaClosedForm(benchmark::State& state) {
    const auto p = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(theta_E7(p));
}
BENCHMARK(BM_ThetaClosedForm)->Arg(60)->Arg(240)->Unit(benchmark::kMillisecond);

static void BM_ThetaBrute(benchmark::State& state) {
    const IntLattice l = parse_lattice_expr("E7");
    const auto p = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(theta_brute(l, p));
}
BENCHMARK(BM_ThetaBrute)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_DiscGroupL2d(benchmark::State& state) {
    const IntLattice l = named::L2d(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(disc_group(l).order());
}
BENCHMARK(BM_DiscGroupL2d)->Arg(5)->Arg(150)->Unit(benchmark::kMicrosecond);

static void BM_SmithLK3(benchmark::State& state) {
    const IntMatrix g = named::LK3().gram();
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(g));
}
BENCHMARK(BM_SmithLK3)->Unit(benchmark::kMicrosecond);
