#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaugepoly/bipermutation.hpp"
#include "gaugepoly/rational.hpp"
#include "gaugepoly/weight_lattice.hpp"

namespace gp::hol {

// Conversion between simplex coordinates (r-coordinates, Σ r_i = 1) and
// zero-sum Cartan coordinates.
RatVec weight_to_r(const weyl::WeightVector& w);
weyl::WeightVector r_to_weight(const RatVec& r);

// The holonomy value at the sorted-simplex vertex u_k attached to a
// bi-permutation: for k >= l the average of λ_{σ(0..N-k-1)}, for k < l the
// average of λ_{τ(l-1-k..l-1)}. Returns the raw vector, its normalization,
// the fundamental-domain reduction, and the reduced point's r-coordinates.
struct VertexImage {
    RatVec theta;
    weyl::WeightVector theta_bar;
    weyl::WeightVector reduced;
    RatVec r;
};
VertexImage vertex_image(const charges::BiPermutation& b, int k);

// A cell of the bi-barycentric subdivision of type l: the pair (f, g) in
// S_{N-l} x S_l (one-based value lists) and the N cell vertices in
// r-coordinates. Vertex i < N-l is the average of u_{f(1)},..,u_{f(i+1)}
// (sorted-simplex index k = N-1-i); vertex N-l+j is the average of
// u'_{g(1)},..,u'_{g(j+1)} (sorted index k = j).
struct BiBaryCell {
    int N = 0, l = 0;
    std::vector<int> f, g;
    std::vector<RatVec> vertices;

    int sorted_index(int vertex) const;  // the k of the sorted-simplex vertex
};
std::vector<BiBaryCell> bibary_subdivision(int N, int l);

// Volume of a cell relative to the whole simplex (exact rational).
Rat cell_volume_ratio(const BiBaryCell& cell);

// A piecewise-affine self-map of simplices: one affine map per subdivision
// cell, stored through the images of the cell vertices (r-coordinates in the
// target simplex). Adjacent cells are expected to agree on shared vertices;
// the builder reports when they do not.
struct PiecewiseAffineMap {
    int N = 0, l = 0;
    std::vector<BiBaryCell> cells;
    std::vector<std::vector<RatVec>> images;  // per cell, per vertex, r-coords
    std::vector<bool> degenerate;             // image vertices affinely dependent
    bool faces_agree = true;
    std::string face_note;
};

// H_0: the affine interpolation of the vertex images of the reference
// bi-permutation over the identity cell, extended affinely to the whole
// subdivision. Ht: the cellwise convex combination t·hol + (1-t)·H_0 of the
// surrogate holonomy model with H_0, with every cell-vertex value projected
// to the fundamental domain.
PiecewiseAffineMap build_H0(const charges::BiPermutation& b0);
PiecewiseAffineMap build_Ht(const charges::BiPermutation& b0, const Rat& t);
// The surrogate holonomy model itself (t = 1).
PiecewiseAffineMap build_surrogate_hol(const charges::BiPermutation& b0);

struct DegreeReport {
    int parity = 0;
    int covering_cells = 0;
    int skipped_degenerate = 0;
    bool perturbed = false;   // the target had to be nudged off a face image
    RatVec target_used;
};
// Mod-2 degree at an interior target (r-coordinates): the parity of the
// number of cells whose affine map covers the target. The target is checked
// exactly against all cell-face images and deterministically perturbed when
// it hits one.
DegreeReport degree_mod2(const PiecewiseAffineMap& m, const RatVec& target);

// The recorded mismatch between the vertex formula and the claim that the
// sorted-simplex vertices map onto simplex vertices: at (N,l,k) = (2,0,0)
// the formula produces the barycenter.
struct DiscrepancyReport {
    int N, l, k;
    RatVec formula_r;       // r-coordinates of the formula output
    bool is_vertex;         // whether that point is a vertex of the simplex
    std::string note;
};
DiscrepancyReport vertex_discrepancy_report();

}  // namespace gp::hol
