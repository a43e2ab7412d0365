#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gaugepoly/chain_complex.hpp"
#include "gaugepoly/f2matrix.hpp"

namespace gp::ngon {

// Homology utilities for flat complexes (an endomorphism D with D∘D = 0).
std::size_t flat_homology_dim(const f2::Matrix& d);
bool flat_acyclic(const f2::Matrix& d);
// Induced map on homology of a flat chain map f : (V,dsrc) -> (W,dtgt).
f2::Matrix flat_induced_on_homology(const f2::Matrix& dsrc, const f2::Matrix& dtgt,
                                    const f2::Matrix& f);
// Cone of a flat chain map is acyclic iff f is a quasi-isomorphism.
bool flat_quasi_iso(const f2::Matrix& dsrc, const f2::Matrix& dtgt, const f2::Matrix& f);
// Nilpotency of a square matrix (some power vanishes).
bool is_nilpotent(const f2::Matrix& m);

// An exact n-gon: complexes C_0..C_{n-1} (indices read mod n) and maps
// f^j_k : C_j -> C_k for j < k <= j+n with f^{j+n}_{k+n} = f^j_k. Maps are
// stored flat; an optional Z/2 degree may be declared per map for the Euler
// characteristic bookkeeping.
class NGon {
  public:
    NGon(int n, std::vector<f2::ChainComplex> complexes);

    int n() const { return n_; }
    const f2::ChainComplex& complex(int j) const { return complexes_[mod(j)]; }
    std::size_t cdim(int j) const { return complex(j).total_dim(); }

    // Set f^j_k (0 <= j < n, j < k <= j+n). Flat matrix, cdim(k) x cdim(j).
    void set_map(int j, int k, f2::Matrix m);
    void set_map_degree(int j, int k, int deg);
    // f^j_k for any j < k <= j+n, using the periodicity.
    f2::Matrix map_at(int j, int k) const;
    bool has_declared_degree(int j, int k) const;
    int declared_degree(int j, int k) const;

    int mod(int j) const { return ((j % n_) + n_) % n_; }

  private:
    int n_;
    std::vector<f2::ChainComplex> complexes_;
    std::map<std::pair<int, int>, f2::Matrix> maps_;
    std::map<std::pair<int, int>, int> degrees_;
    std::pair<int, int> canon(int j, int k) const;
};

// Per-identity verification report. One item per pair (j,l) with
// 0 <= j < n, j < l <= j+n:  sum_{j<k<l} f^k_l f^j_k  ==  d f^j_l + f^j_l d
// plus the identity map when l-j = n.
struct NGonReport {
    struct Item {
        int j, l;
        bool pass;
    };
    std::vector<Item> items;
    bool pass = true;
    std::string summary() const;
};
NGonReport verify_ngon(const NGon& g);

// Total complex (C = ⊕C_j, D = Σd_j + Σ_{0<=j<k<=n-1} f^j_k) together with
// the contraction K = Σ_{0<=j<=k<=n-1} f^k_{n+j}. Throws when verify_ngon
// fails.
struct TotalComplexResult {
    f2::Matrix D;
    f2::Matrix K;
    std::vector<std::size_t> offsets;  // block offset of C_j
    bool acyclic = false;
    bool dk_kd_nilpotent = false;  // DK + KD + Id nilpotent
};
TotalComplexResult total_complex(const NGon& g);

// Side complex C_i' = C_{i+1} ⊕ ... ⊕ C_{i+n-1} with comparison maps
// F : C_i -> C_i' (column of f^i_j) and G : C_i' -> C_i (row of f^j_{n+i}).
// GF + Id = d h + h d holds exactly with h = f^i_{n+i}; FG differs from the
// homotopy-corrected identity by a strictly block-triangular endomorphism.
struct SideComplexResult {
    f2::Matrix Dprime;
    f2::Matrix F, G;
    f2::Matrix h;       // homotopy for GF
    f2::Matrix Kprime;  // homotopy for FG
    bool gf_identity_exact = false;
    bool fg_identity_up_to_nilpotent = false;
    bool F_quasi_iso = false;
    bool G_quasi_iso = false;
};
SideComplexResult side_complex(const NGon& g, int i);

// Triangle detection data: complexes C_i for i in Z/3 with maps
// f_i : C_i -> C_{i+1}, g_i : C_i -> C_{i+2}, h_i : C_i -> C_i (flat).
struct Triangle {
    std::array<f2::ChainComplex, 3> C;
    std::array<f2::Matrix, 3> f, g, h;
};

struct TriangleReport {
    // identity indices: 1: d²=0, 2: df+fd=0,
    // 3: dg+ff+gd=0, 4: dh+fg+gf+hd=1
    std::array<bool, 3> id1, id2, id3, id4;
    std::array<bool, 3> induced_quasi_iso;   // (f_i,g_i): C_i -> Cone(f_{i+1})
    std::array<bool, 3> homology_exact;      // im (f_i)_* = ker (f_{i+1})_*
    int failed_identity = 0;                 // 0 when all pass
    bool pass = false;
};
TriangleReport triangle_detect(const Triangle& t);

// Euler characteristic bookkeeping (mod-2 graded n-gons where f^j_k has
// declared degree k-j-1 for 0 <= j < k <= n-1). Throws when a map violates
// its declared degree. Returns true iff Σ (-1)^j χ(C_j) = 0.
bool euler_check(const NGon& g);

// --- instance generators -------------------------------------------------

// Random mod-2 graded complex with dims <= max_dim per parity.
f2::ChainComplex random_mod2_complex(std::mt19937& rng, std::size_t max_dim);
// Uniformly random degree-0 chain map A -> B (sampled from the solution
// space of the commuting condition).
f2::ChainMap random_chain_map(std::mt19937& rng, const f2::ChainComplex& a,
                              const f2::ChainComplex& b);

// The canonical exact triangle A -> B -> Cone(φ) of a chain map φ, with the
// g maps and (zero) h maps coming from the canonical contraction.
Triangle cone_triangle(const f2::ChainMap& phi);
// The same triangle packaged as an exact 3-gon.
NGon triangle_to_ngon(const Triangle& t);

// The two-periodic 4-gon with C_0 = C_2 = F2 in opposite parities, zero
// differentials, and f^j_{j+2} = 1.
NGon two_periodic_fourgon();
// Direct sum of two n-gons with equal n.
NGon direct_sum(const NGon& a, const NGon& b);

}  // namespace gp::ngon
