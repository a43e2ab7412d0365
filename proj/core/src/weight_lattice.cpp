#include "gaugepoly/weight_lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gp::weyl {

void WeightVector::validate() const {
    if (int(t.size()) != N || N < 1) throw std::invalid_argument("weight vector size mismatch");
    if (vec_sum(t) != 0) throw std::invalid_argument("weight vector must have zero sum");
}

RatVec r_coords(const WeightVector& w) {
    w.validate();
    RatVec r(w.N);
    for (int i = 0; i + 1 < w.N; ++i) r[i] = w.t[i + 1] - w.t[i];
    r[w.N - 1] = w.t[0] - w.t[w.N - 1] + 1;
    return r;
}

bool in_fundamental_domain(const WeightVector& w) {
    for (const Rat& r : r_coords(w))
        if (r < 0) return false;
    return true;
}

Rat bracket_plus(const RatVec& v) { return vec_sum(v); }

WeightVector normalize(const RatVec& v) {
    int N = int(v.size());
    if (N < 1) throw std::invalid_argument("empty vector");
    Rat avg = vec_sum(v) / N;
    WeightVector w;
    w.N = N;
    w.t.reserve(N);
    for (const Rat& x : v) w.t.push_back(x - avg);
    return w;
}

RatVec lambda_vec(int N, int i) {
    if (i < 0 || i > N) throw std::invalid_argument("lambda index out of range");
    RatVec v(N, Rat(0));
    for (int j = N - i; j < N; ++j) v[j] = 1;
    return v;
}

WeightVector lambda_bar(int N, int i) { return normalize(lambda_vec(N, i)); }

ReductionResult reduce_to_fundamental_domain(const WeightVector& t) {
    t.validate();
    int N = t.N;

    // d = Σ ceil(t_i); the d indices with the most negative ceiling defect
    // t_i - ceil(t_i) get k_i = ceil(t_i) - 1, the rest k_i = ceil(t_i).
    std::vector<long> ceils(N);
    long d = 0;
    for (int i = 0; i < N; ++i) {
        ceils[i] = rat_ceil(t.t[i]);
        d += ceils[i];
    }
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return t.t[a] - ceils[a] < t.t[b] - ceils[b];
    });
    std::vector<long> k(N);
    for (int pos = 0; pos < N; ++pos) {
        int i = order[pos];
        k[i] = (pos < d) ? ceils[i] - 1 : ceils[i];
    }

    RatVec shifted(N);
    for (int i = 0; i < N; ++i) shifted[i] = t.t[i] - k[i];

    std::vector<int> tau(N);
    std::iota(tau.begin(), tau.end(), 0);
    std::stable_sort(tau.begin(), tau.end(),
                     [&](int a, int b) { return shifted[a] < shifted[b]; });

    ReductionResult out;
    out.lattice = k;
    out.permutation = tau;
    out.reduced.N = N;
    out.reduced.t.resize(N);
    for (int i = 0; i < N; ++i) out.reduced.t[i] = shifted[tau[i]];
    out.reduced.validate();
    if (!in_fundamental_domain(out.reduced))
        throw std::logic_error("reduction left the fundamental domain");
    return out;
}

std::vector<long> LensFlatConnection::reduced() const {
    std::vector<long> out;
    out.reserve(exponents.size());
    for (long e : exponents) out.push_back(((e % p) + p) % p);
    std::sort(out.begin(), out.end());
    return out;
}

void LensFlatConnection::validate() const {
    if (p < 1) throw std::invalid_argument("lens order must be positive");
    if (exponents.empty()) throw std::invalid_argument("empty exponent list");
}

long h0_lens(const LensFlatConnection& chi) {
    chi.validate();
    std::map<long, long> mult;
    for (long e : chi.reduced()) ++mult[e];
    long h = -1;
    for (auto& [e, m] : mult) h += m * m;
    return h;
}

void TorusFlatConnection::validate() const {
    point.validate();
    if (!in_fundamental_domain(point))
        throw std::invalid_argument("torus holonomy point outside the fundamental domain");
}

long h0_s1s2(const TorusFlatConnection& beta) {
    beta.validate();
    int N = beta.point.N;
    // eigenvalue coincidence: t_i - t_j ∈ Z (exact rational test)
    std::vector<int> comp(N, -1);
    int ncomp = 0;
    for (int i = 0; i < N; ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = ncomp;
        for (int j = i + 1; j < N; ++j) {
            if (comp[j] >= 0) continue;
            Rat diff = beta.point.t[i] - beta.point.t[j];
            if (diff.get_den() == 1) comp[j] = ncomp;
        }
        ++ncomp;
    }
    std::vector<long> mult(ncomp, 0);
    for (int i = 0; i < N; ++i) ++mult[comp[i]];
    long h = -1;
    for (long m : mult) h += m * m;
    return h;
}

}  // namespace gp::weyl
