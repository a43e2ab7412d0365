#pragma once

#include <vector>

#include "gaugepoly/rational.hpp"

namespace gp::weyl {

// A point of the Cartan algebra of su(N): an exact rational N-vector with
// zero sum.
struct WeightVector {
    int N = 0;
    RatVec t;

    void validate() const;  // zero sum, size N
    bool operator==(const WeightVector&) const = default;
};

// Simplex coordinates r_i: r_i = t_{i+1} - t_i for i < N, r_N = t_1 - t_N + 1.
// They satisfy Σ r_i = 1; the fundamental domain is cut out by r_i >= 0.
RatVec r_coords(const WeightVector& w);
bool in_fundamental_domain(const WeightVector& w);

// [v]_+ = Σ v_i and the normalization v - ([v]_+/N)(1,..,1).
Rat bracket_plus(const RatVec& v);
WeightVector normalize(const RatVec& v);

// λ_i = (0,..,0,1,..,1) with i ones, and its normalization λ̄_i, a vertex of
// the fundamental domain.
RatVec lambda_vec(int N, int i);
WeightVector lambda_bar(int N, int i);

struct ReductionResult {
    WeightVector reduced;          // t* in the fundamental domain
    std::vector<int> permutation;  // τ as images: τ(i) = permutation[i]
    std::vector<long> lattice;     // k in the root lattice, t* = τ(t - k)
};

// Reduce t to the fundamental domain of the affine Weyl action: find the
// unique root-lattice vector k with width(t-k) <= 1 via the ceiling-defect
// sort, then sort t-k ascending. Ties use stable index order.
ReductionResult reduce_to_fundamental_domain(const WeightVector& t);

// Flat U(k)-connection on the lens space L(p,1) (or L(p,q)): a multiset of
// exponents of ζ, reduced mod p.
struct LensFlatConnection {
    int p = 0;
    std::vector<long> exponents;  // one per U(1) summand; rank = size

    std::vector<long> reduced() const;  // exponents mod p, sorted
    void validate() const;
};

// dim H^0 with adjoint su(k) coefficients: Σ m_a^2 - 1 over the multiplicities
// of equal exponents.
long h0_lens(const LensFlatConnection& chi);

// Flat SU(N)-connection on S^1 x S^2 given by the holonomy point in T/W.
// h^0 = h^1 = Σ m_a^2 - 1 over eigenvalue multiplicities; eigenvalues
// exp(2πi t_a) coincide exactly when t_a - t_b is an integer.
struct TorusFlatConnection {
    WeightVector point;
    void validate() const;  // membership in the fundamental domain
};
long h0_s1s2(const TorusFlatConnection& beta);

}  // namespace gp::weyl
