#include <benchmark/benchmark.h>

#include "lch/augment.hpp"
#include "lch/fixtures.hpp"
#include "lch/linearize.hpp"

namespace {

using namespace lch;

void BM_AugvarCount(benchmark::State& state)
{
    const int g = static_cast<int>(state.range(0));
    const auto q = static_cast<std::uint64_t>(state.range(1));
    auto d = fixture_Lgk(g, g / 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(augvar_count(d, q).count);
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(augvar_count(d, q).total_points));
}
BENCHMARK(BM_AugvarCount)->Args({2, 3})->Args({2, 7})->Args({3, 3})->Args({3, 5})->Args({4, 3});

void BM_FiberLinkHomology(benchmark::State& state)
{
    auto d = fixture_fiber_link(static_cast<int>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(homology_betti(linear_part(d)));
}
BENCHMARK(BM_FiberLinkHomology)->Arg(1)->Arg(5)->Arg(20);

void BM_StabilizedHomology(benchmark::State& state)
{
    Dga d = fixture_fiber_link(2, 2);
    for (int i = 0; i < state.range(0); ++i)
        d = stabilize(d, 1 + i % 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(homology_betti(linear_part(d)));
}
BENCHMARK(BM_StabilizedHomology)->Arg(4)->Arg(16)->Arg(64);

void BM_LeibnizWord(benchmark::State& state)
{
    auto d = fixture_Lgk(3, 1);
    NcPoly x = NcPoly::scalar(d.algebra(), 1);
    for (int i = 0; i < state.range(0); ++i)
        x = x * NcPoly::generator(d.algebra(), static_cast<GenId>(1 + i % 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(leibniz_extend(d, x));
}
BENCHMARK(BM_LeibnizWord)->Arg(2)->Arg(6)->Arg(12);

void BM_Fingerprint(benchmark::State& state)
{
    auto d = fixture_Lgk(2, 1);
    const std::vector<std::uint64_t> qs{2, 3, 5};
    for (auto _ : state)
        benchmark::DoNotOptimize(fingerprint(d, qs));
}
BENCHMARK(BM_Fingerprint);

}  // namespace

BENCHMARK_MAIN();
