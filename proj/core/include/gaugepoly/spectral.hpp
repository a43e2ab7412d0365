#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gaugepoly/chain_complex.hpp"
#include "gaugepoly/f2matrix.hpp"

namespace gp::f2 {

// A filtered complex: a flat differential D with D∘D = 0 on F2^n, a
// descending filtration F_0 ⊇ F_1 ⊇ ... ⊇ F_m of subcomplexes (F_0 must be
// the whole space; F_p = 0 for p > m), and an optional degree layout when the
// flat space came from a graded complex.
class FilteredComplex {
  public:
    // From a graded complex. Each filtration level is a list of flat-space
    // basis vectors (rows). Degree bookkeeping is kept when every level is
    // spanned by degree-homogeneous vectors.
    FilteredComplex(const ChainComplex& c, std::vector<Matrix> level_bases);
    // From a bare endomorphism with D∘D = 0 (single degree bucket).
    FilteredComplex(Matrix d, std::vector<Matrix> level_bases);

    std::size_t ambient() const { return n_; }
    const Matrix& differential() const { return d_; }
    int depth() const { return int(levels_.size()) - 1; }  // m
    const Subspace& level(int p) const;                    // clamped outside [0,m]

    // Degree buckets, ascending; (degree label, slice subspace).
    const std::vector<std::pair<int, Subspace>>& buckets() const { return buckets_; }
    bool graded() const { return graded_; }
    // Bucket index holding degree-1 relative to bucket b.
    int bucket_below(int b) const;

    // Throws std::invalid_argument when a level is not contained in the
    // previous one or not closed under the differential.
    void validate() const;

    // dim of the associated graded of H(D) at filtration level p (and degree
    // bucket b when graded).
    std::size_t graded_homology(int p, int b) const;

  private:
    std::size_t n_ = 0;
    Matrix d_;
    std::vector<Subspace> levels_;
    std::vector<std::pair<int, Subspace>> buckets_;
    bool graded_ = false, mod2_ = false;
    Subspace zero_, full_;
    void init(std::vector<Matrix> level_bases);
};

// One page of the spectral sequence of a filtered complex. Page numbering
// follows the convention in which page 1 is the associated graded complex
// with its induced differential and page r+1 is the homology of page r. The
// differential of page r shifts the filtration level by r-1 and drops the
// internal degree by one.
struct SpectralPage {
    int page_index = 1;
    // (filtration level, degree) -> dimension
    std::map<std::pair<int, int>, std::size_t> terms;
    // differential out of (level, degree), a matrix in the chosen term bases
    std::map<std::pair<int, int>, Matrix> differentials;

    std::size_t total_dim() const {
        std::size_t t = 0;
        for (auto& [k, v] : terms) t += v;
        return t;
    }
};

// Pages 1..max_page. Dimensions and differentials are computed by the exact
// subquotient formulas with deterministic pivot-order bases.
std::vector<SpectralPage> spectral_sequence(const FilteredComplex& f, int max_page);

}  // namespace gp::f2
