#include <doctest.h>

#include <stdexcept>

#include <random>

#include "gaugepoly/exact_polygon.hpp"
#include "gaugepoly/spectral.hpp"

using namespace gp;
using f2::ChainComplex;
using f2::ChainMap;
using f2::FilteredComplex;
using f2::Matrix;

namespace {

// flat basis rows for a whole complex
Matrix full_rows(std::size_t n) { return Matrix::identity(n); }

}  // namespace

TEST_CASE("one-step filtration: the homology page appears at page two and stabilizes") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        ChainComplex c = ngon::random_mod2_complex(rng, 6);
        if (c.total_dim() == 0) continue;
        FilteredComplex f(c, {full_rows(c.total_dim()), Matrix(0, c.total_dim())});
        auto pages = f2::spectral_sequence(f, 4);
        auto h = c.homology();
        // page 1 is the associated graded: dimensions of the complex itself
        CHECK(pages[0].terms[{0, 0}] == c.dim(0));
        CHECK(pages[0].terms[{0, 1}] == c.dim(1));
        // page 2 is its homology, and later pages stay put
        CHECK(pages[1].terms[{0, 0}] == h[0]);
        CHECK(pages[1].terms[{0, 1}] == h[1]);
        CHECK(pages[2].terms == pages[1].terms);
        CHECK(pages[3].terms == pages[1].terms);
    }
}

TEST_CASE("filtration must be differential-closed") {
    // complex F2 --id--> F2 (mod-2): the span of the degree-0 generator alone
    // is not closed under d
    std::map<int, std::size_t> dims{{0, 1}, {1, 1}};
    std::map<int, Matrix> diffs{{0, Matrix::identity(1)}, {1, Matrix(1, 1)}};
    ChainComplex c(f2::Grading::Mod2, dims, diffs);
    c.validate();
    Matrix sub(1, 2);
    sub.set(0, 0, true);  // degree-0 generator, d of it is the degree-1 one
    CHECK_THROWS_AS(FilteredComplex(c, {full_rows(2), sub}), std::invalid_argument);
}

TEST_CASE("two-step filtration of a cone recovers the connecting map rank") {
    std::mt19937 rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        ChainComplex a = ngon::random_mod2_complex(rng, 6);
        ChainComplex b = ngon::random_mod2_complex(rng, 6);
        ChainMap f = ngon::random_chain_map(rng, a, b);
        ChainComplex cn = cone(f);
        if (cn.total_dim() == 0) continue;
        // F_0 = cone, F_1 = B (a subcomplex); gr_0 = A[1], gr_1 = B.
        // Flat layout per parity: B_p then A_{p-1}.
        Matrix bsub(b.total_dim(), cn.total_dim());
        std::size_t row = 0;
        for (int p : {0, 1})
            for (std::size_t i = 0; i < b.dim(p); ++i, ++row)
                bsub.set(row, cn.offset(p) + i, true);
        FilteredComplex fc(cn, {full_rows(cn.total_dim()), bsub});
        auto pages = f2::spectral_sequence(fc, 4);

        // page 2, level 0 = H(A[1]), level 1 = H(B); the page-2 differential
        // level 0 -> level 1 is the connecting map, i.e. f_* up to the shift.
        auto ha = a.homology();
        auto hb = b.homology();
        CHECK(pages[1].terms[{0, 0}] == ha[1]);
        CHECK(pages[1].terms[{0, 1}] == ha[0]);
        CHECK(pages[1].terms[{1, 0}] == hb[0]);
        CHECK(pages[1].terms[{1, 1}] == hb[1]);

        std::size_t rank_f = 0;
        for (int d : {0, 1}) rank_f += f.induced_on_homology(d).rank();
        std::size_t rank_d2 = 0;
        rank_d2 += pages[1].differentials[{0, 0}].rank();
        rank_d2 += pages[1].differentials[{0, 1}].rank();
        CHECK(rank_d2 == rank_f);

        // the final page carries gr H(cone)
        auto hc = cn.homology();
        std::size_t final_total = pages[3].total_dim();
        CHECK(final_total == hc[0] + hc[1]);
    }
}

TEST_CASE("pages are monotonically non-increasing and each is the homology of the previous") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 60; ++trial) {
        ChainComplex a = ngon::random_mod2_complex(rng, 5);
        ChainComplex b = ngon::random_mod2_complex(rng, 5);
        ChainMap f = ngon::random_chain_map(rng, a, b);
        ChainComplex cn = cone(f);
        if (cn.total_dim() == 0) continue;
        Matrix bsub(b.total_dim(), cn.total_dim());
        std::size_t row = 0;
        for (int p : {0, 1})
            for (std::size_t i = 0; i < b.dim(p); ++i, ++row)
                bsub.set(row, cn.offset(p) + i, true);
        FilteredComplex fc(cn, {full_rows(cn.total_dim()), bsub});
        auto pages = f2::spectral_sequence(fc, 5);
        for (std::size_t pg = 0; pg + 1 < pages.size(); ++pg) {
            CHECK(pages[pg + 1].total_dim() <= pages[pg].total_dim());
            // homology of page pg equals page pg+1, term by term:
            // dims drop by twice the rank of the page differential
            std::size_t total_rank = 0;
            for (auto& [key, mat] : pages[pg].differentials) total_rank += mat.rank();
            CHECK(pages[pg + 1].total_dim() == pages[pg].total_dim() - 2 * total_rank);
            // differentials square to zero where composable
            for (auto& [key, mat] : pages[pg].differentials) {
                auto [lvl, deg] = key;
                int r = pages[pg].page_index - 1;
                auto it = pages[pg].differentials.find({lvl + r, deg == 0 ? 1 : 0});
                if (it != pages[pg].differentials.end() && it->second.rows() > 0 &&
                    mat.rows() == it->second.cols())
                    CHECK((it->second * mat).is_zero());
            }
        }
    }
}
