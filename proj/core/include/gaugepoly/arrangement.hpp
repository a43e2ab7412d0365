#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gaugepoly/rational.hpp"
#include "gaugepoly/ribbon_tree.hpp"

namespace gp::assoc {

// An arrangement of n strictly increasing rational points on the line,
// considered modulo affine maps. Canonical form: first point 0, last point 1
// (n >= 2; a single point sits at 0).
struct Arrangement {
    RatVec x;

    int size() const { return int(x.size()); }
    void validate() const;              // strict ordering
    Arrangement canonical() const;      // affine-normalized representative
    bool is_canonical() const;
};

// Territory balls for an arrangement: r_j = (1/8) min_{i != j} |x_i - x_j|,
// parent ball centered at the midpoint of the extremes with R = 8 max|x_j - c|.
struct TerritoryBalls {
    RatVec radii;
    Rat parent_center;
    Rat parent_radius;

    // The defining conditions: x_i outside B_{4 r_j}(x_j) for i != j and
    // B_{r_j}(x_j) inside B_{R/4}(center).
    bool conditions_hold(const Arrangement& a) const;
};
TerritoryBalls territory_section(const Arrangement& a);

// A point of the associahedron chart N(F_T): one arrangement per interior
// vertex (sizes d(v)) plus a neck scale per interior edge. Scales are the
// rational surrogate ρ = "e^{-s}" in (0, ρ0); an empty optional means the
// infinite (fully stretched) parameter.
struct KPoint {
    RibbonTree tree;
    std::vector<Arrangement> vertex_arrangements;
    std::vector<std::optional<Rat>> neck_scales;
    Rat rho0 = Rat(1, 16);

    void validate() const;
    bool all_finite() const;
};

struct GlueResult {
    bool boundary = false;  // an infinite parameter was present: face point, unchanged
    Arrangement merged;     // canonical merged arrangement (when !boundary)
};

// The chart map: recursively replaces the point matched with each interior
// edge by the affine image of the child arrangement's parent ball into
// B_{ρ r_j}(x_j), processing the lowest-index parameter first. An optional
// processing order (edge indices, a permutation of 0..l-1 compatible with the
// tree partial order) supports order-independence experiments.
GlueResult glue_arrangements(const KPoint& p, const std::vector<int>* order = nullptr);

// Annular decomposition of the glued space R³ minus the arrangement: a neck
// annulus per interior edge, an end per leaf, and a fat region per interior
// vertex. All data in the final (canonical) coordinates; solid regions are
// balls/annuli centered on axis points.
struct AnnularDecomposition {
    struct Neck {
        int edge;
        Rat center;          // on the axis
        Rat inner, outer;    // radii, outer/inner = rho0/ρ
        Rat ratio;           // exact rho0 / ρ
        int source_vertex, target_vertex;
        bool infinite = false;  // stretched edge: two punctured pieces
    };
    struct End {
        int leaf;          // 0..n-1, or -1 for the root leaf
        int vertex;        // incident interior vertex
        Rat center;        // axis point (unused for the root end)
        Rat radius;        // ball radius; root end is the outside of the parent ball
    };
    struct Fat {
        int vertex;
        Rat center;
        Rat outer;                       // outer ball radius
        std::vector<std::pair<Rat, Rat>> holes;  // (center, radius) removed
    };
    std::vector<Neck> necks;
    std::vector<End> ends;
    std::vector<Fat> fats;
    Arrangement merged;
    bool consistent = false;        // exact disjointness/tiling checks passed
    std::string consistency_note;   // first violated condition, if any
};
AnnularDecomposition annular_decomposition(const KPoint& p);

// The gluing partition functions γ_i, one per interior vertex, evaluated at a
// 3-dimensional rational point (q0, q1, q2). Exact rationals in [0,1] summing
// to one. The radial profile inside a neck is the rational bump in |y-c|²
// with plateaus on the first and last thirds.
Rat gamma(const AnnularDecomposition& ad, int vertex, const std::array<Rat, 3>& y);

// The forgetful map to the weak compactification: the root vertex's
// arrangement with multiplicities (leaf counts through each outgoing edge).
struct WeightedArrangement {
    RatVec x;
    std::vector<int> multiplicity;
    int total() const;
};
WeightedArrangement forgetful(const KPoint& p);

}  // namespace gp::assoc
