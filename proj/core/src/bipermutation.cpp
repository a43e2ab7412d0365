#include "gaugepoly/bipermutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace gp::charges {

bool BiPermutation::images_disjoint() const {
    std::vector<bool> seen(N, false);
    for (int v : sigma) {
        if (v < 0 || v >= N || seen[v]) return false;
        seen[v] = true;
    }
    for (int v : tau) {
        if (v < 0 || v >= N || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

void BiPermutation::validate() const {
    if (l < 0 || l > N) throw std::invalid_argument("bi-permutation type out of range");
    if (int(sigma.size()) != N - l || int(tau.size()) != l)
        throw std::invalid_argument("bi-permutation arity mismatch");
    if (!images_disjoint())
        throw std::invalid_argument("bi-permutation images must be disjoint and injective");
}

BiPermutation act_bipermutation(const BiPermutation& b0, const std::vector<int>& f,
                                const std::vector<int>& g) {
    b0.validate();
    if (int(f.size()) != b0.N - b0.l || int(g.size()) != b0.l)
        throw std::invalid_argument("acting pair has wrong sizes");
    std::vector<int> finv = inverse_perm(f), ginv = inverse_perm(g);
    BiPermutation out;
    out.N = b0.N;
    out.l = b0.l;
    out.sigma.resize(b0.sigma.size());
    out.tau.resize(b0.tau.size());
    for (int i = 0; i < int(out.sigma.size()); ++i) out.sigma[i] = b0.sigma[finv[i] - 1];
    for (int j = 0; j < int(out.tau.size()); ++j) out.tau[j] = b0.tau[ginv[j] - 1];
    out.validate();
    return out;
}

std::vector<int> compose_perm(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i] - 1];
    return out;
}

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    return p;
}

std::vector<int> inverse_perm(const std::vector<int>& f) {
    std::vector<int> inv(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) inv[f[i] - 1] = int(i) + 1;
    return inv;
}

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> p = identity_perm(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace gp::charges
