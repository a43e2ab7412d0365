#include "gaugepoly/charge_index.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace gp::charges {

long bracket_plus(const ChargeVector& v) { return std::accumulate(v.begin(), v.end(), 0L); }

void ChargeEnsemble::validate() const {
    if (N < 1) throw std::invalid_argument("ensemble needs N >= 1");
    if (v.empty()) throw std::invalid_argument("empty ensemble");
    for (const auto& x : v)
        if (int(x.size()) != N) throw std::invalid_argument("charge vector size mismatch");
}

weyl::LensFlatConnection ChargeEnsemble::limiting_lens() const {
    weyl::LensFlatConnection chi;
    chi.p = N;
    for (const auto& x : v) chi.exponents.push_back(bracket_plus(x));
    return chi;
}

namespace {

long sq_norm(const ChargeVector& a, const ChargeVector& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        long d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

long inf_norm(const ChargeVector& a, const ChargeVector& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::labs(a[i] - b[i]));
    return s;
}

// The ordered-pair sums shared by the energy and the index formulas: the
// squared distance term appears in both and is computed in one place.
struct PairSums {
    long sq = 0;       // Σ |v_i - v_j|²₂
    long br_abs = 0;   // Σ |[v_i]_+ - [v_j]_+|
    long br_sq = 0;    // Σ ([v_i]_+ - [v_j]_+)²
};

PairSums pair_sums(const ChargeEnsemble& e) {
    e.validate();
    PairSums p;
    int k = e.k();
    std::vector<long> br(k);
    for (int i = 0; i < k; ++i) br[i] = bracket_plus(e.v[i]);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            p.sq += sq_norm(e.v[i], e.v[j]);
            long d = br[i] - br[j];
            p.br_abs += std::labs(d);
            p.br_sq += d * d;
        }
    }
    return p;
}

}  // namespace

Rat energy(const ChargeEnsemble& e) {
    PairSums p = pair_sums(e);
    return (Rat(p.sq) - Rat(p.br_sq, e.N)) / Rat(4 * e.k());
}

long index_capped(const ChargeEnsemble& e) {
    PairSums p = pair_sums(e);
    return p.sq - p.br_abs - weyl::h0_lens(e.limiting_lens());
}

long index_with_torus_end(const ChargeEnsemble& e, long h0_beta) {
    return index_capped(e) - h0_beta;
}

bool is_minimal(const ChargeEnsemble& e) {
    e.validate();
    // Sorting the vectors lexicographically descending realizes the chain
    // v_1 >= ... >= v_k whenever one exists (componentwise order embeds in
    // lexicographic order on comparable chains).
    std::vector<ChargeVector> w = e.v;
    std::sort(w.begin(), w.end(), [](const ChargeVector& a, const ChargeVector& b) {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    });
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        for (std::size_t c = 0; c < w[i].size(); ++c)
            if (w[i][c] < w[i + 1][c]) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (inf_norm(w[i], w[j]) > 1) return false;
    return true;
}

ChargeEnsemble sharp_decomposition(const std::vector<long>& s, int N, int k) {
    if (int(s.size()) != N) throw std::invalid_argument("exponent vector must have length N");
    for (long sj : s)
        if (sj < 0 || sj >= k)
            throw std::invalid_argument("exponent out of range for a sharp decomposition");
    ChargeEnsemble e;
    e.N = N;
    for (int l = 1; l <= k; ++l) {
        ChargeVector v(N, 0);
        for (int j = 0; j < N; ++j)
            if (l <= s[j]) v[j] = 1;
        e.v.push_back(v);
    }
    return e;
}

BiPermCycleResult bipermutation_cycle(int N, int l, const std::vector<int>& sigma,
                                      const std::vector<int>& tau) {
    if (l < 0 || l > N || int(sigma.size()) != N - l || int(tau.size()) != l)
        throw std::invalid_argument("bi-permutation arity mismatch");
    BiPermCycleResult out;
    out.coefficients.reserve(N);
    for (int x : sigma) out.coefficients.push_back(x);
    for (int x : tau) out.coefficients.push_back(x);
    BiPermutation b{N, l, sigma, tau};
    out.admissible = b.images_disjoint();
    return out;
}

std::vector<RatVec> intersection_form(int N) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    // e_i -> E_i - (1/N) Σ E_m inside diag(-1,..,-1):
    // e_i · e_j = 1/N - δ_ij, and Σ e_i = 0.
    std::vector<RatVec> m(N, RatVec(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m[i][j] = Rat(1, N) - Rat(i == j ? 1 : 0);
    return m;
}

Rat intersection_pair(int N, const ChargeVector& a, const ChargeVector& b) {
    if (int(a.size()) != N || int(b.size()) != N)
        throw std::invalid_argument("class size mismatch");
    auto m = intersection_form(N);
    Rat s = 0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) s += Rat(a[i]) * m[i][j] * Rat(b[j]);
    return s;
}

GammaCycle gamma_cycle(const std::vector<int>& S, long w_class, int surgery_index) {
    GammaCycle g;
    g.w_class = w_class;
    g.surgery_index = surgery_index;
    for (int x : S) {
        if (x < 0) throw std::invalid_argument("subset elements must be non-negative");
        g.sigma += x;
    }
    return g;
}

Rat rho_h0_sum(long j, int N) {
    if (std::labs(j) > N) throw std::invalid_argument("|j| must be at most N");
    return Rat(2) - Rat(4 * std::labs(j)) + Rat(4 * j * j, N);
}

long index_capped_rho_route(const ChargeEnsemble& e) {
    e.validate();
    long k = e.k();
    for (const auto& x : e.v) {
        long b = bracket_plus(x);
        if (b < 0 || b >= e.N)
            throw std::invalid_argument("rho route needs 0 <= [v]_+ < N for every vector");
    }
    Rat rhs = Rat(4 * k) * energy(e) - Rat(k * k - 1, 2);
    Rat corr = Rat(k - 1);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            corr += rho_h0_sum(bracket_plus(e.v[i]) - bracket_plus(e.v[j]), e.N);
    rhs += corr / 2;
    Rat ind = rhs - Rat(weyl::h0_lens(e.limiting_lens()));
    if (ind.get_den() != 1) throw std::logic_error("rho-route index is not an integer");
    return long(ind.get_num().get_si());
}

}  // namespace gp::charges
