#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaugepoly/bipermutation.hpp"
#include "gaugepoly/rational.hpp"
#include "gaugepoly/weight_lattice.hpp"

namespace gp::charges {

using ChargeVector = std::vector<long>;  // integer N-vector of first Chern data

// A k-tuple of charge vectors with a common N.
struct ChargeEnsemble {
    int N = 0;
    std::vector<ChargeVector> v;

    int k() const { return int(v.size()); }
    void validate() const;
    // exponents [v_i]_+ mod N of the limiting lens-space flat connection
    weyl::LensFlatConnection limiting_lens() const;
};

long bracket_plus(const ChargeVector& v);

// Topological energy κ = (1/4k)(Σ_{i,j}|v_i-v_j|²₂ - (1/N)Σ_{i,j}([v_i]_+-[v_j]_+)²),
// ordered-pair sums.
Rat energy(const ChargeEnsemble& e);

// Index on the capped space: Σ|v_i-v_j|²₂ - Σ|[v_i]_+-[v_j]_+| - h⁰(χ_v).
long index_capped(const ChargeEnsemble& e);

// Index with the free S¹xS² end: index_capped - h⁰(β), with h⁰(β) supplied by
// the caller (it depends on the metric through the limiting holonomy).
long index_with_torus_end(const ChargeEnsemble& e, long h0_beta);

// Minimality: some permutation of the v_i satisfies v_1 >= ... >= v_k with
// |v_i - v_j|_∞ <= 1; equivalently the index meets its lower bound -h⁰(χ).
bool is_minimal(const ChargeEnsemble& e);

// The distinguished staircase decomposition of exponent data: row l has a
// one in column j exactly when l <= s_j (l = 1..k). Requires 0 <= s_j.
ChargeEnsemble sharp_decomposition(const std::vector<long>& s, int N, int k);

// The rank-N charge vector attached to a bi-permutation,
// (σ(0),..,σ(N-l-1),τ(0),..,τ(l-1)), and whether the associated completely
// reducible connection attains the minimal index (true exactly when the
// images are disjoint; the check accepts raw injection data so that
// overlapping inputs can be probed).
struct BiPermCycleResult {
    ChargeVector coefficients;
    bool admissible = false;
};
BiPermCycleResult bipermutation_cycle(int N, int l, const std::vector<int>& sigma,
                                      const std::vector<int>& tau);

// The rational intersection form e_i · e_j = 1/N - δ_ij on the classes
// e_1..e_N, realized through the embedding e_i -> E_i - (1/N) Σ E_m into the
// diagonal form diag(-1,..,-1).
std::vector<RatVec> intersection_form(int N);
Rat intersection_pair(int N, const ChargeVector& a, const ChargeVector& b);

// The 1-cycle data γ_S = P.D.(w + σ_S·K_i): the class multiple σ_S = Σ_{s∈S} s.
struct GammaCycle {
    long w_class = 0;
    long sigma = 0;  // Σ of the elements of S
    int surgery_index = 0;
};
GammaCycle gamma_cycle(const std::vector<int>& S, long w_class, int surgery_index);

// (h⁰+ρ)(ζ^j) = 2 - 4|j| + 4j²/N for |j| <= N, the closed form folded into
// the index computation.
Rat rho_h0_sum(long j, int N);

// Cross-check route for the index via the closed ρ-form:
// ind + h⁰(χ) = 4kκ - (k²-1)/2 + (k-1 + Σ_{i<j} (h⁰+ρ)(s_i - s_j))/2.
// Valid when every [v_i]_+ lies in [0, N).
long index_capped_rho_route(const ChargeEnsemble& e);

}  // namespace gp::charges
