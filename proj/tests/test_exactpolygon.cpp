#include <doctest.h>

#include <stdexcept>

#include <random>

#include "gaugepoly/exact_polygon.hpp"
#include "gaugepoly/spectral.hpp"
#include "gaugepoly/surgery_signs.hpp"

using namespace gp;
using f2::ChainComplex;
using f2::Grading;
using f2::Matrix;
using ngon::NGon;

TEST_CASE("the two-periodic 4-gon verifies and its total complex is acyclic") {
    NGon g = ngon::two_periodic_fourgon();
    auto rep = verify_ngon(g);
    CHECK(rep.pass);
    auto tot = total_complex(g);
    CHECK(tot.acyclic);
    CHECK(tot.dk_kd_nilpotent);
}

TEST_CASE("the all-zero n-gon verifies for several n") {
    for (int n : {2, 3, 4, 5}) {
        std::vector<ChainComplex> cs(n, ChainComplex::zero(Grading::Mod2));
        NGon g(n, cs);
        CHECK(verify_ngon(g).pass);
        CHECK(total_complex(g).acyclic);
    }
}

TEST_CASE("dropping one long map of the 4-gon breaks exactly the wrap identity") {
    NGon g = ngon::two_periodic_fourgon();
    g.set_map(2, 4, Matrix(1, 1));  // zero out f^2_4
    auto rep = verify_ngon(g);
    CHECK_FALSE(rep.pass);
    for (auto& item : rep.items) {
        if (!item.pass) CHECK(item.l - item.j == 4);
    }
}

TEST_CASE("cone-generated triangles pass everything") {
    std::mt19937 rng(42);
    int done = 0;
    while (done < 60) {
        ChainComplex a = ngon::random_mod2_complex(rng, 6);
        ChainComplex b = ngon::random_mod2_complex(rng, 6);
        f2::ChainMap phi = ngon::random_chain_map(rng, a, b);
        ngon::Triangle t = ngon::cone_triangle(phi);
        auto trep = triangle_detect(t);
        CHECK(trep.pass);
        NGon g = ngon::triangle_to_ngon(t);
        CHECK(verify_ngon(g).pass);
        auto tot = total_complex(g);
        CHECK(tot.acyclic);
        CHECK(tot.dk_kd_nilpotent);
        ++done;
    }
}

TEST_CASE("triangle identities detect an injected failure") {
    // Perturb some h_i by a term E that fails to commute with the
    // differential (a non-homotopy term); identity 4 must break.
    std::mt19937 rng(43);
    int found = 0;
    while (found < 10) {
        ChainComplex a = ngon::random_mod2_complex(rng, 4);
        ChainComplex b = ngon::random_mod2_complex(rng, 4);
        f2::ChainMap phi = ngon::random_chain_map(rng, a, b);
        ngon::Triangle t = ngon::cone_triangle(phi);
        bool injected = false;
        for (int i = 0; i < 3 && !injected; ++i) {
            Matrix d = t.C[i].flat_diff();
            for (std::size_t r = 0; r < d.rows() && !injected; ++r) {
                for (std::size_t c = 0; c < d.cols() && !injected; ++c) {
                    Matrix e(d.rows(), d.cols());
                    e.set(r, c, true);
                    if ((d * e + e * d).is_zero()) continue;  // a homotopy term
                    t.h[i] = t.h[i] + e;
                    injected = true;
                }
            }
        }
        if (!injected) continue;  // zero differential everywhere: no such term
        auto rep = triangle_detect(t);
        CHECK_FALSE(rep.pass);
        CHECK(rep.failed_identity == 4);
        ++found;
    }
}

TEST_CASE("all-zero triangle passes vacuously") {
    ngon::Triangle t;
    for (int i = 0; i < 3; ++i) {
        t.C[i] = ChainComplex::zero(Grading::Mod2);
        t.f[i] = Matrix(0, 0);
        t.g[i] = Matrix(0, 0);
        t.h[i] = Matrix(0, 0);
    }
    CHECK(triangle_detect(t).pass);
}

TEST_CASE("side complexes are homotopy equivalent to the omitted complex") {
    std::mt19937 rng(44);
    int done = 0;
    while (done < 40) {
        ChainComplex a = ngon::random_mod2_complex(rng, 5);
        ChainComplex b = ngon::random_mod2_complex(rng, 5);
        f2::ChainMap phi = ngon::random_chain_map(rng, a, b);
        NGon g = ngon::triangle_to_ngon(ngon::cone_triangle(phi));
        for (int i = 0; i < 3; ++i) {
            auto side = side_complex(g, i);
            CHECK(side.gf_identity_exact);
            CHECK(side.fg_identity_up_to_nilpotent);
            CHECK(side.F_quasi_iso);
            CHECK(side.G_quasi_iso);
        }
        ++done;
    }
}

TEST_CASE("side complex of the two-periodic 4-gon concentrates the right homology") {
    NGon g = ngon::two_periodic_fourgon();
    auto side = side_complex(g, 0);
    // C_0' = C_1 ⊕ C_2 ⊕ C_3 has homology F2, matching H(C_0)
    CHECK(ngon::flat_homology_dim(side.Dprime) == 1);
    CHECK(side.F_quasi_iso);
    CHECK(side.G_quasi_iso);
    CHECK(side.gf_identity_exact);
}

TEST_CASE("direct sums of verified polygons verify") {
    std::mt19937 rng(45);
    ChainComplex a = ngon::random_mod2_complex(rng, 4);
    ChainComplex b = ngon::random_mod2_complex(rng, 4);
    NGon g1 = ngon::two_periodic_fourgon();
    NGon g2 = ngon::two_periodic_fourgon();
    NGon g = ngon::direct_sum(g1, g2);
    CHECK(verify_ngon(g).pass);
    CHECK(total_complex(g).acyclic);
    CHECK(euler_check(g));
}

TEST_CASE("euler characteristic bookkeeping") {
    NGon g = ngon::two_periodic_fourgon();
    // deg(C_0 gen) = 0, deg(C_2 gen) = 1: 1 - 0 + (-1) - 0 = 0
    CHECK(euler_check(g));

    std::mt19937 rng(46);
    for (int trial = 0; trial < 60; ++trial) {
        ChainComplex a = ngon::random_mod2_complex(rng, 6);
        ChainComplex b = ngon::random_mod2_complex(rng, 6);
        f2::ChainMap phi = ngon::random_chain_map(rng, a, b);
        NGon g3 = ngon::triangle_to_ngon(ngon::cone_triangle(phi));
        CHECK(euler_check(g3));
    }
}

TEST_CASE("euler_check rejects maps with wrong declared degree") {
    NGon g = ngon::two_periodic_fourgon();
    g.set_map_degree(0, 2, 0);  // the map truly has degree 1
    CHECK_THROWS_AS(euler_check(g), std::invalid_argument);
}

TEST_CASE("spectral sequence of the total complex converges to zero, E2 = sum of homologies") {
    std::mt19937 rng(47);
    int done = 0;
    while (done < 40) {
        ChainComplex a = ngon::random_mod2_complex(rng, 5);
        ChainComplex b = ngon::random_mod2_complex(rng, 5);
        f2::ChainMap phi = ngon::random_chain_map(rng, a, b);
        NGon g = ngon::triangle_to_ngon(ngon::cone_triangle(phi));
        auto tot = total_complex(g);
        std::size_t total = tot.D.cols();
        if (total == 0) {
            ++done;
            continue;
        }
        // F_i = C_i ⊕ ... ⊕ C_{n-1}
        std::vector<Matrix> levels;
        levels.push_back(Matrix::identity(total));
        for (int i = 1; i < g.n(); ++i) {
            std::size_t off = tot.offsets[i];
            Matrix rows(total - off, total);
            for (std::size_t r = 0; r < total - off; ++r) rows.set(r, off + r, true);
            levels.push_back(rows);
        }
        f2::FilteredComplex fc(tot.D, levels);
        auto pages = f2::spectral_sequence(fc, g.n() + 2);
        // page 2: ⊕_j H(C_j) by level
        for (int j = 0; j < g.n(); ++j) {
            std::size_t want = ngon::flat_homology_dim(g.complex(j).flat_diff());
            std::size_t got = 0;
            for (auto& [key, dim] : pages[1].terms)
                if (key.first == j) got += dim;
            CHECK(got == want);
        }
        // the page-2 differential is induced by the single-step maps
        for (int j = 0; j + 1 < g.n(); ++j) {
            Matrix induced = ngon::flat_induced_on_homology(
                g.complex(j).flat_diff(), g.complex(j + 1).flat_diff(), g.map_at(j, j + 1));
            std::size_t got = 0;
            for (auto& [key, mat] : pages[1].differentials)
                if (key.first == j) got += mat.rank();
            CHECK(got == induced.rank());
        }
        // converges to zero
        CHECK(pages.back().total_dim() == 0);
        ++done;
    }
}

TEST_CASE("spectral sequence on the side complex converges to the omitted homology") {
    // the second spectral sequence: filter C_0' = C_1 ⊕ ... ⊕ C_{n-1} by
    // F_p = C_{p+1} ⊕ ... ⊕ C_{n-1}; it converges to H(C_0)
    std::mt19937 rng(48);
    int done = 0;
    while (done < 30) {
        ChainComplex a = ngon::random_mod2_complex(rng, 5);
        ChainComplex b = ngon::random_mod2_complex(rng, 5);
        f2::ChainMap phi = ngon::random_chain_map(rng, a, b);
        NGon g = ngon::triangle_to_ngon(ngon::cone_triangle(phi));
        auto side = side_complex(g, 0);
        std::size_t total = side.Dprime.cols();
        if (total == 0) {
            ++done;
            continue;
        }
        std::vector<std::size_t> offsets;
        std::size_t off = 0;
        for (int j = 1; j < g.n(); ++j) {
            offsets.push_back(off);
            off += g.cdim(j);
        }
        std::vector<Matrix> levels;
        levels.push_back(Matrix::identity(total));
        for (int p = 1; p + 1 < g.n(); ++p) {
            Matrix rows(total - offsets[p], total);
            for (std::size_t r = 0; r < total - offsets[p]; ++r)
                rows.set(r, offsets[p] + r, true);
            levels.push_back(rows);
        }
        f2::FilteredComplex fc(side.Dprime, levels);
        auto pages = f2::spectral_sequence(fc, g.n() + 2);
        // page 2 = ⊕_{0<j<n} H(C_j); the final page totals H(C_0)
        for (int j = 1; j < g.n(); ++j) {
            std::size_t want = ngon::flat_homology_dim(g.complex(j).flat_diff());
            std::size_t got = 0;
            for (auto& [key, dim] : pages[1].terms)
                if (key.first == j - 1) got += dim;
            CHECK(got == want);
        }
        CHECK(pages.back().total_dim() ==
              ngon::flat_homology_dim(g.complex(0).flat_diff()));
        ++done;
    }
}

TEST_CASE("epsilon signs vanish when nu is lambda or mu") {
    for (int N : {2, 3, 4}) {
        ngon::SurgerySignData d;
        d.lambda = {1, 0};
        d.mu = {0, 1};
        d.nu = d.lambda;
        auto r1 = epsilon_signs(d, N);
        for (int e : r1.eps_prime) CHECK(e == 0);
        for (int e : r1.eps) CHECK(e == 0);
        d.nu = d.mu;
        auto r2 = epsilon_signs(d, N);
        for (int e : r2.eps_prime) CHECK(e == 0);
        for (int e : r2.eps) CHECK(e == 0);
    }
}

TEST_CASE("epsilon four-case rule matches the hand-computed fixture") {
    // N=2, λ=(1,0), μ=(0,1), ν=(1,-1): (λ+jμ)·ν = -1, -2, -3 for j = 0,1,2:
    // equal signs throughout, so ε' = (0,0).
    ngon::SurgerySignData d;
    d.lambda = {1, 0};
    d.mu = {0, 1};
    d.nu = {1, -1};
    auto r = epsilon_signs(d, 2);
    CHECK(r.eps_prime == std::vector<int>{0, 0});
    CHECK(r.eps == std::vector<int>{0, 0, 0});

    // sign change: ν=(1,1): (λ+jμ)·ν = 1·1-0·1=1, then (1,1)·(1,1)=0, then
    // (1,2)·(1,1) = 1-2 = -1: j=1 hits the fourth case (b=0 -> 1), j=2 the
    // third (a=0 -> 0).
    d.nu = {1, 1};
    auto r2 = epsilon_signs(d, 2);
    CHECK(r2.eps_prime == std::vector<int>{1, 0});
    CHECK(r2.eps == std::vector<int>{0, 1, 1});

    // degrees: N even: deg(f_q) = k-1+Σ_{m=j+1}^{j+k} ε'_m (mod 2)
    CHECK(r2.degree_table[0][0] == 1);  // j=0, k=1: 0 + ε'_1 = 1
    CHECK(r2.degree_table[0][1] == 0);  // j=0, k=2: 1 + ε'_1+ε'_2 = 1+1 = 0
    CHECK(r2.degree_table[1][0] == 0);  // j=1, k=1: 0 + ε'_2 = 0

    // odd N: degrees are k-1 regardless of the data
    auto r3 = epsilon_signs(d, 3);
    CHECK(r3.degree_table[0][0] == 0);
    CHECK(r3.degree_table[0][1] == 1);
    CHECK(r3.degree_table[0][2] == 0);
}

TEST_CASE("degenerate sign data is rejected") {
    ngon::SurgerySignData d;
    d.lambda = {0, 0};
    d.mu = {1, 0};
    d.nu = {1, 0};
    // (λ+0μ)·ν = 0 and (λ+1μ)·ν = 0 simultaneously
    CHECK_THROWS_AS(epsilon_signs(d, 2), std::invalid_argument);
}
