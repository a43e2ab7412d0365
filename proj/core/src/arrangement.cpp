#include "gaugepoly/arrangement.hpp"

#include <stdexcept>

namespace gp::assoc {

void Arrangement::validate() const {
    if (x.empty()) throw std::invalid_argument("empty arrangement");
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (!(x[i] < x[i + 1])) throw std::invalid_argument("arrangement must be strictly increasing");
}

Arrangement Arrangement::canonical() const {
    validate();
    Arrangement out;
    if (x.size() == 1) {
        out.x = {Rat(0)};
        return out;
    }
    Rat lo = x.front(), span = x.back() - x.front();
    out.x.reserve(x.size());
    for (const Rat& p : x) out.x.push_back((p - lo) / span);
    return out;
}

bool Arrangement::is_canonical() const {
    validate();
    if (x.size() == 1) return x[0] == 0;
    return x.front() == 0 && x.back() == 1;
}

TerritoryBalls territory_section(const Arrangement& a) {
    a.validate();
    int n = a.size();
    TerritoryBalls t;
    if (n == 1) {
        t.radii = {Rat(1, 8)};
        t.parent_center = a.x[0];
        t.parent_radius = 1;
        return t;
    }
    t.radii.resize(n);
    for (int j = 0; j < n; ++j) {
        Rat best;
        bool have = false;
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            Rat d = rat_abs(a.x[i] - a.x[j]);
            if (!have || d < best) {
                best = d;
                have = true;
            }
        }
        t.radii[j] = best / 8;
    }
    t.parent_center = (a.x.front() + a.x.back()) / 2;
    Rat mx = 0;
    for (const Rat& p : a.x) mx = std::max(mx, rat_abs(p - t.parent_center));
    t.parent_radius = 8 * mx;
    return t;
}

bool TerritoryBalls::conditions_hold(const Arrangement& a) const {
    int n = a.size();
    if (int(radii.size()) != n) return false;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            if (rat_abs(a.x[i] - a.x[j]) <= 4 * radii[j]) return false;
        }
        // B_{r_j}(x_j) ⊂ B_{R/4}(center)
        if (rat_abs(a.x[j] - parent_center) + radii[j] >= parent_radius / 4) return false;
    }
    return true;
}

void KPoint::validate() const {
    tree.validate();
    if (int(vertex_arrangements.size()) != tree.interior_vertex_count())
        throw std::invalid_argument("need one arrangement per interior vertex");
    for (int v = 0; v < tree.interior_vertex_count(); ++v) {
        vertex_arrangements[v].validate();
        if (vertex_arrangements[v].size() != tree.out_degree(v))
            throw std::invalid_argument("arrangement size must match the vertex degree");
    }
    if (int(neck_scales.size()) != tree.interior_edge_count())
        throw std::invalid_argument("need one neck scale per interior edge");
    for (const auto& s : neck_scales)
        if (s && !(*s > 0 && *s < rho0))
            throw std::invalid_argument("neck scale must lie in (0, rho0)");
}

bool KPoint::all_finite() const {
    for (const auto& s : neck_scales)
        if (!s) return false;
    return true;
}

int WeightedArrangement::total() const {
    int t = 0;
    for (int m : multiplicity) t += m;
    return t;
}

WeightedArrangement forgetful(const KPoint& p) {
    p.validate();
    WeightedArrangement out;
    const Arrangement root = p.vertex_arrangements[0].canonical();
    out.x = root.x;
    out.multiplicity.assign(root.size(), 0);
    // leaf count through each outgoing edge of the root vertex
    for (int pos = 0; pos < p.tree.out_degree(0); ++pos) {
        const auto& c = p.tree.children(0)[pos];
        if (c.is_leaf) {
            out.multiplicity[pos] = 1;
        } else {
            auto [lo, hi] = p.tree.leaf_span(c.index);
            out.multiplicity[pos] = hi - lo + 1;
        }
    }
    return out;
}

}  // namespace gp::assoc
