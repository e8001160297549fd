#include <benchmark/benchmark.h>

#include "mostad/algorithm.hpp"
#include "mostad/metrics.hpp"

using namespace mostad;

namespace {

std::vector<ObjectiveVector> random_points(std::size_t n, std::size_t m, std::uint64_t seed)
{
    RngStream rng(seed);
    std::vector<ObjectiveVector> pts(n, ObjectiveVector(m));
    for (auto& p : pts)
        for (auto& v : p) v = rng.uniform(0.0, 1.0);
    return pts;
}

// Points on the positive unit sphere, all mutually nondominated.
std::vector<ObjectiveVector> sphere(std::size_t n, std::size_t m, std::uint64_t seed)
{
    auto pts = random_points(n, m, seed);
    for (auto& p : pts) {
        const double len = norm(p);
        for (auto& v : p) v /= len;
    }
    return pts;
}

void BM_Scalarize(benchmark::State& state)
{
    const auto kind = state.range(0) == 0 ? Scalarization::Tchebycheff : Scalarization::ModifiedTchebycheff;
    const Weighting w({0.2, 0.3, 0.5});
    const std::vector<double> z{0.0, 0.0, 0.0};
    const ScalarizationContext ctx{w, z};
    const auto pts = random_points(1024, 3, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(scalarize(kind, pts[i++ & 1023], ctx));
    }
    state.SetLabel(state.range(0) == 0 ? "tchebycheff" : "modified_tchebycheff");
}
BENCHMARK(BM_Scalarize)->Arg(0)->Arg(1);

void BM_NondominatedFilter(benchmark::State& state)
{
    const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 3, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nondominated_filter(pts));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NondominatedFilter)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_Hypervolume(benchmark::State& state)
{
    const auto m = static_cast<std::size_t>(state.range(1));
    const auto pts = sphere(static_cast<std::size_t>(state.range(0)), m, 3);
    const std::vector<double> ref(m, 1.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hypervolume(pts, ref));
    }
}
BENCHMARK(BM_Hypervolume)->Args({100, 2})->Args({1000, 2})->Args({100, 3})->Args({400, 3});

void BM_IgdPlus(benchmark::State& state)
{
    const auto sol = sphere(200, 3, 4);
    const auto ref = sphere(static_cast<std::size_t>(state.range(0)), 3, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(igd_plus(sol, ref));
    }
}
BENCHMARK(BM_IgdPlus)->Arg(1000)->Arg(10000);

// One reproduce + update cycle at the default configuration.
void BM_Generation(benchmark::State& state)
{
    const auto problem = make_problem("P2");
    AlgorithmConfig c;
    c.operators.se = static_cast<std::size_t>(state.range(0));
    c.max_evals = std::numeric_limits<std::size_t>::max() / 2;
    auto s = initialize(*problem, c);
    for (auto _ : state) {
        const auto q = reproduce(s);
        benchmark::DoNotOptimize(update(s, q));
    }
}
BENCHMARK(BM_Generation)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
