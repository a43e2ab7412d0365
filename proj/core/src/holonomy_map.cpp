#include "gaugepoly/holonomy_map.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gp::hol {

RatVec weight_to_r(const weyl::WeightVector& w) { return weyl::r_coords(w); }

weyl::WeightVector r_to_weight(const RatVec& r) {
    int N = int(r.size());
    if (N < 1) throw std::invalid_argument("empty r-vector");
    if (vec_sum(r) != 1) throw std::invalid_argument("r-coordinates must sum to one");
    RatVec t(N, Rat(0));
    for (int i = 1; i < N; ++i) t[i] = t[i - 1] + r[i - 1];
    Rat mean = vec_sum(t) / N;
    weyl::WeightVector w;
    w.N = N;
    for (Rat& x : t) w.t.push_back(x - mean);
    w.validate();
    return w;
}

VertexImage vertex_image(const charges::BiPermutation& b, int k) {
    b.validate();
    int N = b.N, l = b.l;
    if (k < 0 || k > N - 1) throw std::invalid_argument("vertex index out of range");
    VertexImage out;
    out.theta.assign(N, Rat(0));
    if (k >= l) {
        // (1/(N-k)) (λ_{σ(0)} + ... + λ_{σ(N-k-1)})
        for (int m = 0; m <= N - k - 1; ++m) {
            RatVec lam = weyl::lambda_vec(N, b.sigma[m]);
            for (int c = 0; c < N; ++c) out.theta[c] += lam[c];
        }
        for (int c = 0; c < N; ++c) out.theta[c] /= (N - k);
    } else {
        // (1/(k+1)) (λ_{τ(l-1-k)} + ... + λ_{τ(l-1)})
        for (int m = l - 1 - k; m <= l - 1; ++m) {
            RatVec lam = weyl::lambda_vec(N, b.tau[m]);
            for (int c = 0; c < N; ++c) out.theta[c] += lam[c];
        }
        for (int c = 0; c < N; ++c) out.theta[c] /= (k + 1);
    }
    out.theta_bar = weyl::normalize(out.theta);
    out.reduced = weyl::reduce_to_fundamental_domain(out.theta_bar).reduced;
    out.r = weyl::r_coords(out.reduced);
    return out;
}

int BiBaryCell::sorted_index(int vertex) const {
    if (vertex < 0 || vertex >= N) throw std::invalid_argument("cell vertex out of range");
    if (vertex < N - l) return N - 1 - vertex;
    return vertex - (N - l);
}

std::vector<BiBaryCell> bibary_subdivision(int N, int l) {
    if (l < 0 || l > N || N < 1) throw std::invalid_argument("bad subdivision type");
    auto fs = charges::all_perms(N - l);
    auto gs = charges::all_perms(l);
    std::vector<BiBaryCell> cells;
    for (const auto& f : fs) {
        for (const auto& g : gs) {
            BiBaryCell cell;
            cell.N = N;
            cell.l = l;
            cell.f = f;
            cell.g = g;
            // o-side averages over r-coordinates f(1)..f(k1)
            for (int k1 = 1; k1 <= N - l; ++k1) {
                RatVec v(N, Rat(0));
                for (int m = 1; m <= k1; ++m) v[f[m - 1] - 1] = Rat(1, k1);
                cell.vertices.push_back(v);
            }
            // q-side averages over s-coordinates g(1)..g(k2)
            for (int k2 = 1; k2 <= l; ++k2) {
                RatVec v(N, Rat(0));
                for (int m = 1; m <= k2; ++m) v[N - l + g[m - 1] - 1] = Rat(1, k2);
                cell.vertices.push_back(v);
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

namespace {

// Solve the NxN rational system A x = b by Gaussian elimination. Returns
// nothing when A is singular.
std::optional<RatVec> solve_linear(std::vector<RatVec> a, RatVec b) {
    int n = int(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Rat inv = Rat(1) / a[col][col];
        for (int c = 0; c < n; ++c) a[col][c] *= inv;
        b[col] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat factor = a[r][col];
            for (int c = 0; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    return b;
}

// Barycentric coordinates of q with respect to simplex vertices vs (all in
// the Σ = 1 hyperplane). Empty when the vertices are affinely dependent.
std::optional<RatVec> barycentric(const std::vector<RatVec>& vs, const RatVec& q) {
    int n = int(q.size());
    std::vector<RatVec> a(n, RatVec(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = vs[c][r];
    return solve_linear(std::move(a), q);
}

bool affinely_independent(const std::vector<RatVec>& vs) {
    // points in the Σ=1 hyperplane: affine independence = invertibility
    int n = int(vs.size());
    std::vector<RatVec> a(n, RatVec(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = vs[c][r];
    RatVec rhs(n, Rat(0));
    // determinant via elimination
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        std::swap(a[piv], a[col]);
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat factor = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    (void)rhs;
    return true;
}

std::string rvec_key(const RatVec& v) {
    std::ostringstream os;
    for (const Rat& x : v) os << rat_str(x) << "|";
    return os.str();
}

// Surrogate holonomy value at a cell vertex: the vertex formula of the
// bi-permutation acted on by the cell's defining pair.
RatVec surrogate_value(const charges::BiPermutation& b0, const BiBaryCell& cell, int vertex) {
    charges::BiPermutation b = charges::act_bipermutation(b0, cell.f, cell.g);
    return vertex_image(b, cell.sorted_index(vertex)).r;
}

PiecewiseAffineMap assemble(const charges::BiPermutation& b0, const std::optional<Rat>& t) {
    b0.validate();
    int N = b0.N, l = b0.l;
    PiecewiseAffineMap out;
    out.N = N;
    out.l = l;
    out.cells = bibary_subdivision(N, l);

    // H_0 : affine extension of the identity cell's vertex images. Evaluate
    // H_0 at an arbitrary point via barycentric coordinates in the identity
    // cell (which may be negative outside of it).
    const BiBaryCell* idcell = &out.cells.front();
    for (const auto& c : out.cells) {
        bool isid = c.f == charges::identity_perm(N - l) && c.g == charges::identity_perm(l);
        if (isid) idcell = &c;
    }
    std::vector<RatVec> h0_images;
    for (int v = 0; v < N; ++v)
        h0_images.push_back(vertex_image(b0, idcell->sorted_index(v)).r);
    bool h0_invertible = affinely_independent(h0_images);

    auto h0_at = [&](const RatVec& q) -> RatVec {
        auto bc = barycentric(idcell->vertices, q);
        if (!bc) throw std::logic_error("identity cell degenerate");
        RatVec img(N, Rat(0));
        for (int v = 0; v < N; ++v)
            for (int c = 0; c < N; ++c) img[c] += (*bc)[v] * h0_images[v][c];
        return img;
    };

    std::map<std::string, RatVec> seen;
    for (const auto& cell : out.cells) {
        std::vector<RatVec> imgs;
        for (int v = 0; v < N; ++v) {
            RatVec val;
            if (!t) {
                val = h0_at(cell.vertices[v]);
            } else {
                RatVec sur = surrogate_value(b0, cell, v);
                RatVec h0v = h0_at(cell.vertices[v]);
                RatVec mix(N);
                for (int c = 0; c < N; ++c) mix[c] = *t * sur[c] + (Rat(1) - *t) * h0v[c];
                // project to the fundamental domain through the Cartan algebra
                weyl::WeightVector w = r_to_weight(mix);
                val = weyl::r_coords(weyl::reduce_to_fundamental_domain(w).reduced);
            }
            imgs.push_back(val);
            std::string key = rvec_key(cell.vertices[v]);
            auto it = seen.find(key);
            if (it == seen.end()) {
                seen[key] = imgs.back();
            } else if (it->second != imgs.back()) {
                out.faces_agree = false;
                if (out.face_note.empty())
                    out.face_note = "shared subdivision vertex receives two values";
            }
        }
        out.degenerate.push_back(!affinely_independent(imgs));
        out.images.push_back(std::move(imgs));
    }
    if (!t && !h0_invertible) {
        // H_0 flagged as degenerate on every cell (its linear part is singular)
        for (std::size_t i = 0; i < out.degenerate.size(); ++i) out.degenerate[i] = true;
    }
    return out;
}

}  // namespace

PiecewiseAffineMap build_H0(const charges::BiPermutation& b0) { return assemble(b0, std::nullopt); }

PiecewiseAffineMap build_Ht(const charges::BiPermutation& b0, const Rat& t) {
    if (t < 0 || t > 1) throw std::invalid_argument("interpolation parameter must be in [0,1]");
    return assemble(b0, t);
}

PiecewiseAffineMap build_surrogate_hol(const charges::BiPermutation& b0) {
    return assemble(b0, Rat(1));
}

Rat cell_volume_ratio(const BiBaryCell& cell) {
    // |det[v_1 - v_N, ..., v_{N-1} - v_N]| in the truncated coordinates.
    int N = cell.N;
    if (N == 1) return Rat(1);
    std::vector<RatVec> a(N - 1, RatVec(N - 1));
    for (int c = 0; c + 1 < N; ++c)
        for (int r = 0; r + 1 < N; ++r)
            a[r][c] = cell.vertices[c][r] - cell.vertices[N - 1][r];
    Rat det = 1;
    for (int col = 0; col < N - 1; ++col) {
        int piv = -1;
        for (int r = col; r < N - 1; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < N - 1; ++r) {
            if (a[r][col] == 0) continue;
            Rat factor = a[r][col] / a[col][col];
            for (int c = col; c < N - 1; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return rat_abs(det);
}

DegreeReport degree_mod2(const PiecewiseAffineMap& m, const RatVec& target) {
    if (int(target.size()) != m.N) throw std::invalid_argument("target dimension mismatch");
    if (vec_sum(target) != 1) throw std::invalid_argument("target must have r-coordinate sum one");
    for (const Rat& x : target)
        if (!(x > 0)) throw std::invalid_argument("target must be interior (all r_i > 0)");

    DegreeReport rep;
    RatVec q = target;
    // nudge the target off every cell-face image, deterministically
    for (int attempt = 0; attempt < 64; ++attempt) {
        bool on_face = false;
        for (std::size_t ci = 0; ci < m.cells.size() && !on_face; ++ci) {
            if (m.degenerate[ci]) continue;
            auto bc = barycentric(m.images[ci], q);
            if (!bc) continue;
            for (const Rat& a : *bc)
                if (a == 0) on_face = true;
        }
        if (!on_face) break;
        rep.perturbed = true;
        // move toward the barycenter by 1/(large odd prime), keeps interiority
        Rat step(1, 97 + 2 * attempt);
        RatVec center(m.N, Rat(1, m.N));
        for (int c = 0; c < m.N; ++c) q[c] = q[c] + step * (center[c] - q[c]);
    }
    rep.target_used = q;

    for (std::size_t ci = 0; ci < m.cells.size(); ++ci) {
        if (m.degenerate[ci]) {
            ++rep.skipped_degenerate;
            continue;
        }
        auto bc = barycentric(m.images[ci], q);
        if (!bc) {
            ++rep.skipped_degenerate;
            continue;
        }
        bool inside = true;
        for (const Rat& a : *bc)
            if (!(a > 0)) inside = false;
        if (inside) ++rep.covering_cells;
    }
    rep.parity = rep.covering_cells % 2;
    return rep;
}

DiscrepancyReport vertex_discrepancy_report() {
    charges::BiPermutation b;
    b.N = 2;
    b.l = 0;
    b.sigma = {0, 1};
    b.tau = {};
    VertexImage vi = vertex_image(b, 0);
    DiscrepancyReport rep;
    rep.N = 2;
    rep.l = 0;
    rep.k = 0;
    rep.formula_r = vi.r;
    rep.is_vertex = false;
    for (const Rat& x : vi.r)
        if (x == 1) rep.is_vertex = true;
    rep.note =
        "the vertex formula at (N,l,k) = (2,0,0) returns the barycenter (1/2, 1/2) of the "
        "target simplex, while the degree-one argument expects the sorted-simplex vertices to "
        "map onto simplex vertices; the formula output is recorded as is";
    return rep;
}

}  // namespace gp::hol
