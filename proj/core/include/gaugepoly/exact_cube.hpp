#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gaugepoly/chain_complex.hpp"
#include "gaugepoly/exact_polygon.hpp"
#include "gaugepoly/f2matrix.hpp"

namespace gp::ngon {

// A directed path in the graph G_n whose vertices are subsets of [n]. Paths
// avoiding the connecting edge are (S, σ) with σ an injection into [n]\S;
// paths through the connecting edge are (σ, τ) with disjoint images, running
// [n]\im σ -> ... -> [n] -> ∅ -> ... -> im τ.
struct GnPath {
    bool through = false;
    uint32_t start = 0;            // S for the first kind; [n]\im σ for the second
    std::vector<int> sigma;        // first kind: ordering of T\S; second: ordering of [n]\S
    std::vector<int> tau;          // second kind only
    int length() const { return through ? int(sigma.size() + tau.size()) + 1 : int(sigma.size()); }
    uint32_t end(int n) const;
    bool operator==(const GnPath&) const = default;
    bool operator<(const GnPath& o) const;
    std::string str() const;
};

// All paths from S to T in G_n of length between 1 and max_len.
std::vector<GnPath> enumerate_paths(int n, uint32_t S, uint32_t T, int max_len);

// An exact n-cube: a complex C_S per subset S of [n] and a map f_q per path
// q of length at most n+1. f^S_T is the sum of f_q over paths from S to T.
class NCube {
  public:
    NCube(int n, std::vector<f2::ChainComplex> complexes_by_mask);

    int n() const { return n_; }
    const f2::ChainComplex& complex(uint32_t mask) const { return complexes_.at(mask); }
    std::size_t cdim(uint32_t mask) const { return complexes_.at(mask).total_dim(); }

    void set_path_map(const GnPath& q, f2::Matrix m);
    f2::Matrix path_map(const GnPath& q) const;
    f2::Matrix f_ST(uint32_t S, uint32_t T) const;  // sum over paths, zero if none

  private:
    int n_;
    std::vector<f2::ChainComplex> complexes_;
    std::map<GnPath, f2::Matrix> maps_;
};

struct CubeReport {
    struct Item {
        uint32_t S, T;
        int identity;  // 1, 2 or 3 per the defining equalities
        bool pass;
    };
    std::vector<Item> items;
    bool pass = true;
    std::string summary() const;
};
CubeReport verify_cube(const NCube& q);

// Assembles the exact (n+1)-gon with C_j = ⊕_{|S|=j} C_S and
// f^j_k = Σ_{|S|=j,|T|=k mod (n+1)} f^S_T. Throws when verify_cube fails.
NGon cube_to_polygon(const NCube& q);

// Exact 2-cube built from a chain map φ : A -> B via its mapping cone, with
// C_∅ = A, C_{0} = B, C_{1} = 0, C_{01} = Cone(φ).
NCube cone_two_cube(const f2::ChainMap& phi);

}  // namespace gp::ngon
