#pragma once

#include <vector>

namespace gp::charges {

// A bi-permutation of type l on [N]: injections σ : [N-l] -> [N] and
// τ : [l] -> [N] with disjoint images.
struct BiPermutation {
    int N = 0, l = 0;
    std::vector<int> sigma;  // size N-l
    std::vector<int> tau;    // size l

    void validate() const;  // injectivity and image disjointness
    bool images_disjoint() const;
    bool operator==(const BiPermutation&) const = default;
};

// Action of a pair of permutations (f, g) in S_{N-l} x S_l:
// σ_f(i) = σ0(f^{-1}(i+1) - 1), τ_g(j) = τ0(g^{-1}(j+1) - 1).
// Permutations f, g are given one-based as value lists f[i] = f(i+1).
BiPermutation act_bipermutation(const BiPermutation& b0, const std::vector<int>& f,
                                const std::vector<int>& g);

// Composition of one-based permutations: (f ∘ g)(i) = f(g(i)).
std::vector<int> compose_perm(const std::vector<int>& f, const std::vector<int>& g);
std::vector<int> identity_perm(int n);
std::vector<int> inverse_perm(const std::vector<int>& f);
std::vector<std::vector<int>> all_perms(int n);

}  // namespace gp::charges
