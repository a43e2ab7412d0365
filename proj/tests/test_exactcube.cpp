#include <doctest.h>

#include <stdexcept>

#include <random>

#include "gaugepoly/exact_cube.hpp"
#include "gaugepoly/exact_polygon.hpp"

using namespace gp;
using f2::ChainComplex;
using f2::Grading;
using f2::Matrix;
using ngon::GnPath;
using ngon::NCube;

namespace {
long fact(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}
}  // namespace

TEST_CASE("path counts: orderings of the difference set") {
    // S ⊊ T with |T\S| = m: exactly m! plain paths
    for (int n : {2, 3, 4}) {
        for (uint32_t S = 0; S < (1u << n); ++S) {
            for (uint32_t T = 0; T < (1u << n); ++T) {
                if ((S & T) != S || S == T) continue;
                int m = __builtin_popcount(T) - __builtin_popcount(S);
                auto paths = ngon::enumerate_paths(n, S, T, n + 1);
                long plain = 0;
                for (auto& p : paths)
                    if (!p.through) ++plain;
                CHECK(plain == fact(m));
            }
        }
    }
}

TEST_CASE("through paths at full length only") {
    int n = 3;
    uint32_t full = (1u << n) - 1;
    CHECK(ngon::enumerate_paths(n, full, full, n).empty());
    auto paths = ngon::enumerate_paths(n, full, full, n + 1);
    CHECK(long(paths.size()) == fact(n));  // σ empty, τ any ordering of [n]
    for (auto& p : paths) {
        CHECK(p.through);
        CHECK(p.length() == n + 1);
    }
}

TEST_CASE("through path count is (n-l)! l!") {
    for (int n : {2, 3, 4}) {
        for (uint32_t S = 0; S < (1u << n); ++S) {
            auto paths = ngon::enumerate_paths(n, S, S, n + 1);
            int l = __builtin_popcount(S);
            CHECK(long(paths.size()) == fact(n - l) * fact(l));
        }
    }
}

TEST_CASE("the cone two-cube verifies and assembles into an exact triangle") {
    std::mt19937 rng(71);
    int done = 0;
    while (done < 40) {
        ChainComplex a = ngon::random_mod2_complex(rng, 5);
        ChainComplex b = ngon::random_mod2_complex(rng, 5);
        f2::ChainMap phi = ngon::random_chain_map(rng, a, b);
        NCube q = ngon::cone_two_cube(phi);
        auto rep = verify_cube(q);
        CHECK(rep.pass);
        ngon::NGon g = cube_to_polygon(q);
        CHECK(g.n() == 3);
        CHECK(verify_ngon(g).pass);
        CHECK(total_complex(g).acyclic);
        ++done;
    }
}

TEST_CASE("the all-zero cube gives the zero polygon") {
    for (int n : {1, 2, 3}) {
        std::vector<ChainComplex> cs(std::size_t(1) << n, ChainComplex::zero(Grading::Mod2));
        NCube q(n, cs);
        CHECK(verify_cube(q).pass);
        ngon::NGon g = cube_to_polygon(q);
        CHECK(verify_ngon(g).pass);
        for (int j = 0; j < g.n(); ++j) CHECK(g.cdim(j) == 0);
    }
}

TEST_CASE("a one-cube from a homotopy equivalence verifies and gives an acyclic 2-gon") {
    // C_∅ = A, C_{0} = A ⊕ Cone(id_V): inclusion and projection with the
    // contraction of the acyclic summand as the length-2 homotopy.
    std::mt19937 rng(73);
    int done = 0;
    while (done < 30) {
        ChainComplex a = ngon::random_mod2_complex(rng, 4);
        ChainComplex v = ngon::random_mod2_complex(rng, 3);
        ChainComplex acyc = cone(f2::ChainMap::identity(v));
        ChainComplex b = a.direct_sum(acyc);
        std::size_t na = a.total_dim(), nc = acyc.total_dim(), nb = b.total_dim();
        if (nb == 0) continue;

        // flat inclusion/projection along the per-degree interleaving
        Matrix incl(nb, na), proj(na, nb);
        for (int p : {0, 1})
            for (std::size_t i = 0; i < a.dim(p); ++i) {
                incl.set(b.offset(p) + i, a.offset(p) + i, true);
                proj.set(a.offset(p) + i, b.offset(p) + i, true);
            }
        // contraction K of the acyclic summand: on Cone(id_V) = V ⊕ V[1],
        // K(x, y) = (0, x) satisfies DK + KD = Id there.
        Matrix k(nb, nb);
        for (int p : {0, 1}) {
            int qd = (p + 1) % 2;
            // local layout of acyc in degree p: x-slot V_p then y-slot V_{p-1}
            std::size_t off_p = b.offset(p) + a.dim(p);
            std::size_t off_q = b.offset(qd) + a.dim(qd);
            std::size_t vp = v.dim(p);
            // x-slot of degree p maps into the y-slot of degree p+1 (= V_p)
            for (std::size_t i = 0; i < vp; ++i)
                k.set(off_q + v.dim(qd) + i, off_p + i, true);
        }
        NCube q(1, {a, b});
        q.set_path_map({false, 0u, {0}, {}}, incl);
        q.set_path_map({true, 1u, {}, {}}, proj);
        // homotopies: ∅->∅ through path (σ=(0), τ=()): proj∘incl = id needs h=0;
        // {0}->{0} through path (σ=(), τ=(0)): incl∘proj + id = contraction boundary
        q.set_path_map({true, 1u, {}, {0}}, k);
        auto rep = verify_cube(q);
        CHECK(rep.pass);
        ngon::NGon g = cube_to_polygon(q);
        CHECK(verify_ngon(g).pass);
        CHECK(total_complex(g).acyclic);
        ++done;
    }
}

TEST_CASE("single-edge failure injection is caught") {
    std::mt19937 rng(79);
    ChainComplex a = ngon::random_mod2_complex(rng, 4);
    while (a.total_dim() == 0) a = ngon::random_mod2_complex(rng, 4);
    ChainComplex b = ngon::random_mod2_complex(rng, 4);
    f2::ChainMap phi = ngon::random_chain_map(rng, a, b);
    NCube q = ngon::cone_two_cube(phi);
    // zero out the connecting edge map
    q.set_path_map({true, 3u, {}, {}}, Matrix(q.cdim(0), q.cdim(3)));
    auto rep = verify_cube(q);
    CHECK_FALSE(rep.pass);
    CHECK_THROWS_AS(cube_to_polygon(q), std::invalid_argument);
}
