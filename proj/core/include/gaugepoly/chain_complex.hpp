#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaugepoly/f2matrix.hpp"

namespace gp::f2 {

enum class Grading { Integer, Mod2 };

// A chain complex over GF(2). Degrees are integers; in Mod2 grading the only
// degrees are 0 and 1 and the differential flips parity, which is the same
// thing as a 2-periodic integer-graded complex. Zero-dimensional degrees are
// legal. Values are immutable after construction.
class ChainComplex {
  public:
    ChainComplex() : grading_(Grading::Integer) {}
    ChainComplex(Grading g, std::map<int, std::size_t> dims, std::map<int, Matrix> diffs);

    static ChainComplex zero(Grading g = Grading::Integer) { return ChainComplex(g, {}, {}); }
    // Single space in one degree with zero differential.
    static ChainComplex concentrated(Grading g, int deg, std::size_t dim);

    Grading grading() const { return grading_; }
    int shift_deg(int deg, int by) const;  // deg+by, reduced mod 2 under Mod2

    const std::map<int, std::size_t>& dims() const { return dims_; }
    std::size_t dim(int deg) const;
    // Differential d_deg : C_deg -> C_{deg-1}; zero matrix of the right shape
    // when none was stored.
    Matrix diff(int deg) const;

    std::size_t total_dim() const { return total_; }
    // Flat offset of degree deg inside the total space (degrees ascending).
    std::size_t offset(int deg) const;
    std::vector<int> degrees() const;  // sorted, every degree with declared dim
    // The differential on the total space as one square matrix.
    Matrix flat_diff() const;

    // ker d / im d dimensions per degree, by exact rank over F2.
    std::map<int, std::size_t> homology() const;
    std::size_t total_homology() const;
    bool acyclic() const;

    // Cycle and boundary subspaces of C_deg (coordinates local to the degree).
    Subspace cycles(int deg) const;
    Subspace boundaries(int deg) const;
    // Representatives of a homology basis in degree deg (rows, local coords).
    Matrix homology_representatives(int deg) const;

    ChainComplex direct_sum(const ChainComplex& other) const;
    // Shift: C[1]_deg = C_{deg-1}.
    ChainComplex shifted(int by) const;

    bool operator==(const ChainComplex& o) const = default;

    // Throws std::invalid_argument with a diagnostic when shapes mismatch or
    // d∘d != 0.
    void validate() const;

  private:
    Grading grading_;
    std::map<int, std::size_t> dims_;
    std::map<int, Matrix> diffs_;
    std::size_t total_ = 0;
    std::map<int, std::size_t> offsets_;
    void index();
};

// A homogeneous map of chain complexes with a declared degree shift.
// blocks[deg] : C^src_deg -> C^tgt_{deg+shift}.
class ChainMap {
  public:
    ChainMap() = default;
    ChainMap(ChainComplex src, ChainComplex tgt, int degree_shift, std::map<int, Matrix> blocks);

    static ChainMap zero(const ChainComplex& src, const ChainComplex& tgt, int shift = 0);
    static ChainMap identity(const ChainComplex& c);

    const ChainComplex& source() const { return src_; }
    const ChainComplex& target() const { return tgt_; }
    int degree_shift() const { return shift_; }
    Matrix block(int deg) const;  // zero of the right shape when absent

    // d∘f == f∘d exactly (F2: commuting and anticommuting coincide).
    bool is_chain_map() const;
    void validate() const;  // shapes; throws on mismatch

    Matrix flat() const;  // total matrix, tgt.total_dim() x src.total_dim()

    // Induced map on homology in degree deg: matrix from the homology basis of
    // the source to the homology basis of the target (degree deg+shift).
    Matrix induced_on_homology(int deg) const;

    ChainMap operator+(const ChainMap& o) const;

  private:
    ChainComplex src_, tgt_;
    int shift_ = 0;
    std::map<int, Matrix> blocks_;
};

// Mapping cone of a degree-0 chain map f : A -> B, as B ⊕ A[1] with the
// differential twisted by f. Throws if f is not a chain map.
ChainComplex cone(const ChainMap& f);

// true iff cone(f) is acyclic.
bool is_quasi_iso(const ChainMap& f);

}  // namespace gp::f2
