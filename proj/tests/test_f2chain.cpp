#include <doctest.h>

#include <stdexcept>

#include <random>

#include "gaugepoly/chain_complex.hpp"
#include "gaugepoly/exact_polygon.hpp"
#include "gaugepoly/f2matrix.hpp"

using namespace gp;
using f2::ChainComplex;
using f2::ChainMap;
using f2::Grading;
using f2::Matrix;

namespace {

// Independent oracle: naive Gaussian elimination on vector<vector<int>>,
// written without reference to the bit-packed implementation.
int naive_rank(std::vector<std::vector<int>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != rank && m[r][c]) {
                for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] ^= m[rank][cc];
            }
        }
        ++rank;
    }
    return int(rank);
}

std::vector<std::vector<int>> to_naive(const Matrix& m) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
    return out;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> bit(0, 1);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c, true);
    return m;
}

// Random integer-graded 3-term complex with dims <= 8: C_2 -> C_1 -> C_0.
ChainComplex random_three_term(std::mt19937& rng, std::size_t max_dim) {
    std::uniform_int_distribution<std::size_t> dd(0, max_dim);
    std::size_t n0 = dd(rng), n1 = dd(rng), n2 = dd(rng);
    std::uniform_int_distribution<int> bit(0, 1);
    Matrix d1 = random_matrix(rng, n0, n1);
    // d2 sampled from the kernel of left-multiplication by d1
    std::size_t vars = n1 * n2;
    Matrix sys(n0 * n2, vars);
    for (std::size_t a = 0; a < n0; ++a)
        for (std::size_t b = 0; b < n2; ++b)
            for (std::size_t k = 0; k < n1; ++k)
                if (d1.get(a, k)) sys.set(a * n2 + b, k * n2 + b, true);
    Matrix ker = sys.kernel_basis();
    Matrix d2(n1, n2);
    for (std::size_t kr = 0; kr < ker.rows(); ++kr) {
        if (!bit(rng)) continue;
        for (std::size_t v = 0; v < vars; ++v)
            if (ker.get(kr, v)) d2.set(v / n2, v % n2, !d2.get(v / n2, v % n2));
    }
    std::map<int, std::size_t> dims{{0, n0}, {1, n1}, {2, n2}};
    std::map<int, Matrix> diffs{{1, d1}, {2, d2}};
    ChainComplex c(Grading::Integer, dims, diffs);
    c.validate();
    return c;
}

}  // namespace

TEST_CASE("bit-packed rank agrees with the naive oracle") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> dd(0, 9);
        Matrix m = random_matrix(rng, dd(rng), dd(rng));
        CHECK(int(m.rank()) == naive_rank(to_naive(m)));
    }
}

TEST_CASE("kernel basis spans the kernel") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix m = random_matrix(rng, 6, 8);
        Matrix k = m.kernel_basis();
        CHECK(k.rows() == m.cols() - m.rank());
        for (std::size_t r = 0; r < k.rows(); ++r) {
            f2::BitVec x = f2::bitvec(m.cols());
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (k.get(r, c)) f2::bit_set(x, c, true);
            CHECK(f2::bit_iszero(m.apply(x)));
        }
    }
}

TEST_CASE("solve finds solutions exactly when consistent") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        Matrix m = random_matrix(rng, 7, 5);
        f2::BitVec x0 = f2::bitvec(5);
        std::uniform_int_distribution<int> bit(0, 1);
        for (int c = 0; c < 5; ++c)
            if (bit(rng)) f2::bit_set(x0, c, true);
        f2::BitVec b = m.apply(x0);
        f2::BitVec x;
        REQUIRE(m.solve(b, x));
        f2::BitVec bx = m.apply(x);
        for (int r = 0; r < 7; ++r) CHECK(f2::bit_get(bx, r) == f2::bit_get(b, r));
    }
}

TEST_CASE("zero complex has vanishing homology") {
    ChainComplex c = ChainComplex::zero(Grading::Integer);
    c.validate();
    for (auto& [d, h] : c.homology()) CHECK(h == 0);
    CHECK(c.total_homology() == 0);
}

TEST_CASE("identity differential gives an acyclic two-term complex") {
    std::map<int, std::size_t> dims{{0, 3}, {1, 3}};
    std::map<int, Matrix> diffs{{1, Matrix::identity(3)}};
    ChainComplex c(Grading::Integer, dims, diffs);
    c.validate();
    CHECK(c.acyclic());
}

TEST_CASE("malformed complexes are rejected with a diagnostic") {
    std::map<int, std::size_t> dims{{0, 2}, {1, 3}};
    std::map<int, Matrix> diffs{{1, Matrix::identity(3)}};
    ChainComplex c(Grading::Integer, dims, diffs);
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);

    // d∘d != 0
    std::map<int, std::size_t> dims2{{0, 1}, {1, 1}, {2, 1}};
    std::map<int, Matrix> diffs2{{1, Matrix::identity(1)}, {2, Matrix::identity(1)}};
    ChainComplex c2(Grading::Integer, dims2, diffs2);
    CHECK_THROWS_AS(c2.validate(), std::invalid_argument);
}

TEST_CASE("homology of random three-term complexes matches rank-nullity bookkeeping") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        ChainComplex c = random_three_term(rng, 8);
        auto h = c.homology();
        int r1 = naive_rank(to_naive(c.diff(1)));
        int r2 = naive_rank(to_naive(c.diff(2)));
        CHECK(int(h[0]) == int(c.dim(0)) - r1);
        CHECK(int(h[1]) == int(c.dim(1)) - r1 - r2);
        CHECK(int(h[2]) == int(c.dim(2)) - r2);
    }
}

TEST_CASE("cone of the identity map is acyclic") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        ChainComplex a = ngon::random_mod2_complex(rng, 5);
        CHECK(cone(ChainMap::identity(a)).acyclic());
        CHECK(is_quasi_iso(ChainMap::identity(a)));
    }
}

TEST_CASE("cone of the zero map adds homologies") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        ChainComplex a = ngon::random_mod2_complex(rng, 5);
        ChainComplex b = ngon::random_mod2_complex(rng, 5);
        ChainComplex cn = cone(ChainMap::zero(a, b));
        // H(cone(0)) = H(b) ⊕ H(a[1])
        auto ha = a.homology();
        auto hb = b.homology();
        auto hc = cn.homology();
        CHECK(hc[0] == hb[0] + ha[1]);
        CHECK(hc[1] == hb[1] + ha[0]);
    }
}

TEST_CASE("cone homology matches long-exact-sequence bookkeeping") {
    // dim H(cone) = dim H(B) + dim H(A) - 2 rank(f_*)
    std::mt19937 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        ChainComplex a = ngon::random_mod2_complex(rng, 8);
        ChainComplex b = ngon::random_mod2_complex(rng, 8);
        ChainMap f = ngon::random_chain_map(rng, a, b);
        REQUIRE(f.is_chain_map());
        std::size_t rank_star = 0;
        for (int d : {0, 1}) rank_star += f.induced_on_homology(d).rank();
        ChainComplex cn = cone(f);
        CHECK(cn.total_homology() == b.total_homology() + a.total_homology() - 2 * rank_star);
    }
}

TEST_CASE("quasi-isomorphism detection") {
    std::mt19937 rng(31);
    ChainComplex a = ngon::random_mod2_complex(rng, 4);
    while (a.total_homology() == 0) a = ngon::random_mod2_complex(rng, 4);
    CHECK(is_quasi_iso(ChainMap::identity(a)));
    CHECK_FALSE(is_quasi_iso(ChainMap::zero(a, a)));
    CHECK_THROWS(cone(ChainMap(a, a, 1, {})));  // non-degree-0 rejected
}

TEST_CASE("non-chain-maps are rejected by cone") {
    // A = B = (F2 --id--> F2); the map hitting only the even part fails to
    // commute with the differential.
    std::map<int, std::size_t> dims{{0, 1}, {1, 1}};
    std::map<int, Matrix> diffs{{0, Matrix::identity(1)}};  // d0 : C0 -> C1
    ChainComplex a(f2::Grading::Mod2, dims, diffs);
    a.validate();
    std::map<int, Matrix> blocks{{0, Matrix::identity(1)}};
    ChainMap f(a, a, 0, blocks);
    CHECK_FALSE(f.is_chain_map());
    CHECK_THROWS_AS(cone(f), std::invalid_argument);
}

TEST_CASE("direct sum and shift behave additively on homology") {
    std::mt19937 rng(37);
    ChainComplex a = ngon::random_mod2_complex(rng, 6);
    ChainComplex b = ngon::random_mod2_complex(rng, 6);
    auto ha = a.homology();
    auto hb = b.homology();
    auto hsum = a.direct_sum(b).homology();
    CHECK(hsum[0] == ha[0] + hb[0]);
    CHECK(hsum[1] == ha[1] + hb[1]);
    auto hshift = a.shifted(1).homology();
    CHECK(hshift[1] == ha[0]);
    CHECK(hshift[0] == ha[1]);
}
