#pragma once

#include <array>
#include <vector>

namespace gp::ngon {

// Curve classes on the boundary torus and the intersection pairing. The
// default pairing is the standard unimodular skew form.
struct SurgerySignData {
    std::array<long, 2> lambda{1, 0};
    std::array<long, 2> mu{0, 1};
    std::array<long, 2> nu{1, 0};
    std::array<std::array<long, 2>, 2> pairing{{{0, 1}, {-1, 0}}};

    long pair(const std::array<long, 2>& x, const std::array<long, 2>& y) const;
    void validate() const;  // skew-symmetric, determinant one
};

struct EpsilonResult {
    std::vector<int> eps_prime;  // ε'_1 .. ε'_N
    std::vector<int> eps;        // ε_0 .. ε_N (all zero when N is odd)
    // degree_table[j][k-1] = Z/2 degree of the map attached to a plain path
    // of length k starting at a vertex with |S| = j (1 <= k <= N-j).
    std::vector<std::vector<int>> degree_table;
};

// Sign bookkeeping: evaluates sign((λ+jμ)·ν) for j = 0..N, applies the
// four-case rule to produce ε'_j, accumulates ε_i, and tabulates the mod-2
// degrees of the polygon maps. Throws on the degenerate double-zero input.
EpsilonResult epsilon_signs(const SurgerySignData& data, int N);

}  // namespace gp::ngon
