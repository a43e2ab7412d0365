#include <benchmark/benchmark.h>

#include "gaugepoly/decomposition_tables.hpp"

using namespace gp;

static void BM_DecompositionSearch(benchmark::State& state) {
    // the heaviest table cell: N=4, k=3
    charges::ChargeVector v{0, 0, 1, 2};
    std::vector<long> s{0, 1, 2};
    long window = state.range(0);
    for (auto _ : state) {
        auto row = charges::nice_decomposition_search(v, s, 4, 3, window, true);
        benchmark::DoNotOptimize(row->kappa);
    }
}
BENCHMARK(BM_DecompositionSearch)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_AllTables(benchmark::State& state) {
    for (auto _ : state) {
        auto checks = charges::regenerate_tables(2, true);
        benchmark::DoNotOptimize(checks.size());
    }
}
BENCHMARK(BM_AllTables)->Unit(benchmark::kMillisecond);
