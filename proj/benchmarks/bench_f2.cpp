#include <benchmark/benchmark.h>

#include <random>

#include "gaugepoly/exact_polygon.hpp"
#include "gaugepoly/f2matrix.hpp"

using namespace gp;

static void BM_F2Rank(benchmark::State& state) {
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> bit(0, 1);
    std::size_t n = state.range(0);
    f2::Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (bit(rng)) m.set(r, c, true);
    for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_F2Rank)->Arg(32)->Arg(128)->Arg(512);

static void BM_F2Multiply(benchmark::State& state) {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> bit(0, 1);
    std::size_t n = state.range(0);
    f2::Matrix a(n, n), b(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (bit(rng)) a.set(r, c, true);
            if (bit(rng)) b.set(r, c, true);
        }
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_F2Multiply)->Arg(32)->Arg(128)->Arg(512);

static void BM_TrianglePackage(benchmark::State& state) {
    std::mt19937 rng(3);
    f2::ChainComplex a = ngon::random_mod2_complex(rng, std::size_t(state.range(0)));
    f2::ChainComplex b = ngon::random_mod2_complex(rng, std::size_t(state.range(0)));
    f2::ChainMap phi = ngon::random_chain_map(rng, a, b);
    for (auto _ : state) {
        auto rep = triangle_detect(ngon::cone_triangle(phi));
        benchmark::DoNotOptimize(rep.pass);
    }
}
BENCHMARK(BM_TrianglePackage)->Arg(4)->Arg(8);
