#include <benchmark/benchmark.h>

#include "gaugepoly/ribbon_tree.hpp"

using namespace gp;

static void BM_FaceLattice(benchmark::State& state) {
    int n = int(state.range(0));
    for (auto _ : state) {
        auto l = assoc::face_lattice(n);
        benchmark::DoNotOptimize(l.vertex_count);
    }
}
BENCHMARK(BM_FaceLattice)->Arg(5)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_TreeRoundTrip(benchmark::State& state) {
    auto trees = assoc::enumerate_trees(int(state.range(0)));
    for (auto _ : state) {
        for (const auto& t : trees) {
            auto back = assoc::tree_from_bisections(t.leaf_count(), bisections(t));
            benchmark::DoNotOptimize(back.interior_edge_count());
        }
    }
}
BENCHMARK(BM_TreeRoundTrip)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
