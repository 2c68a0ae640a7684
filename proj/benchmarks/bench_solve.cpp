#include <benchmark/benchmark.h>

#include "outercolor/extension.hpp"
#include "outercolor/generate.hpp"
#include "outercolor/graph.hpp"
#include "outercolor/incidence.hpp"
#include "outercolor/oracle.hpp"
#include "outercolor/reduction.hpp"

using namespace outercolor;

namespace {

void BM_SolveMaximal(benchmark::State& state) {
    Graph g = gen_maximal_outerplanar(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(solve(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveMaximal)->Arg(50)->Arg(200)->Arg(1000)->Arg(2000)->Complexity();

void BM_SolveSparse(benchmark::State& state) {
    Graph g = gen_outerplanar({static_cast<int>(state.range(0)), 0.3, 0.2, 7});
    for (auto _ : state) benchmark::DoNotOptimize(solve(g));
}
BENCHMARK(BM_SolveSparse)->Arg(200)->Arg(2000);

void BM_Verify(benchmark::State& state) {
    Graph g = gen_maximal_outerplanar(static_cast<int>(state.range(0)), 7);
    IncidenceColoring c = solve(g).coloring;
    for (auto _ : state) benchmark::DoNotOptimize(verify_coloring(g, c));
}
BENCHMARK(BM_Verify)->Arg(200)->Arg(2000);

void BM_Generate(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            gen_maximal_outerplanar(static_cast<int>(state.range(0)), ++seed));
}
BENCHMARK(BM_Generate)->Arg(200)->Arg(2000);

void BM_FindConfiguration(benchmark::State& state) {
    Graph g = gen_maximal_outerplanar(500, 3);
    for (auto _ : state) benchmark::DoNotOptimize(find_configuration(g));
}
BENCHMARK(BM_FindConfiguration);

void BM_OracleMinK(benchmark::State& state) {
    Graph g = gen_maximal_outerplanar(8, 5);
    for (auto _ : state) benchmark::DoNotOptimize(min_incidence_k(g, 2));
}
BENCHMARK(BM_OracleMinK);

}  // namespace

BENCHMARK_MAIN();
