#include <benchmark/benchmark.h>

#include "shadowgauge/calculus.hpp"
#include "shadowgauge/generate.hpp"
#include "shadowgauge/inequalities.hpp"
#include "shadowgauge/oracle.hpp"
#include "shadowgauge/shadows.hpp"

using namespace shadowgauge;

namespace {

void zonotope_volume_bench(benchmark::State& state)
{
    const auto z = random_zonotope(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)), 1, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(zonotope_volume(z));
}
BENCHMARK(zonotope_volume_bench)->Args({3, 8})->Args({4, 12})->Args({5, 16});

void surface_measure_bench(benchmark::State& state)
{
    const auto z = random_zonotope(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)), 2, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(surface_measure(z));
}
BENCHMARK(surface_measure_bench)->Args({3, 8})->Args({4, 12});

void shadow_eval_bench(benchmark::State& state)
{
    const auto z = random_zonotope(3, static_cast<std::size_t>(state.range(0)), 3, 0);
    const ShadowFunction f{Body(z)};
    const Direction xi = Direction::normalized(Vector::Ones(3));
    for (auto _ : state)
        benchmark::DoNotOptimize(f(xi));
}
BENCHMARK(shadow_eval_bench)->Arg(6)->Arg(12)->Arg(20);

void separation_bench(benchmark::State& state)
{
    const auto l = random_zonotope(static_cast<int>(state.range(0)), 8, 4, 0);
    const Body k = Body(l).scaled(0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(separation_check(k, l));
}
BENCHMARK(separation_bench)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void mc_volume_bench(benchmark::State& state)
{
    const auto z = random_zonotope(3, 6, 5, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(mc_volume(z, state.range(0), 7));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(mc_volume_bench)->Arg(100000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
