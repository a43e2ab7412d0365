#include "gaugepoly/spectral.hpp"

#include <stdexcept>

namespace gp::f2 {

FilteredComplex::FilteredComplex(const ChainComplex& c, std::vector<Matrix> level_bases)
    : n_(c.total_dim()), d_(c.flat_diff()), mod2_(c.grading() == Grading::Mod2) {
    for (int deg : c.degrees()) {
        std::size_t off = c.offset(deg), sz = c.dim(deg);
        Matrix rows(sz, n_);
        for (std::size_t i = 0; i < sz; ++i) rows.set(i, off + i, true);
        buckets_.push_back({deg, span_of_rows(rows, n_)});
    }
    graded_ = true;
    init(std::move(level_bases));
}

FilteredComplex::FilteredComplex(Matrix d, std::vector<Matrix> level_bases)
    : n_(d.cols()), d_(std::move(d)) {
    if (d_.rows() != d_.cols()) throw std::invalid_argument("differential not square");
    buckets_.push_back({0, full_space(n_)});
    graded_ = false;
    init(std::move(level_bases));
}

void FilteredComplex::init(std::vector<Matrix> level_bases) {
    zero_ = zero_space(n_);
    full_ = full_space(n_);
    for (auto& b : level_bases) levels_.push_back(span_of_rows(b, n_));
    if (levels_.empty()) levels_.push_back(full_);
    validate();
    if (graded_) {
        // Degree bookkeeping only survives when every level splits across the
        // degree slices.
        for (auto& lv : levels_) {
            std::size_t split = 0;
            for (auto& [deg, slice] : buckets_) split += intersect(lv, slice).dim();
            if (split != lv.dim()) {
                graded_ = false;
                break;
            }
        }
        if (!graded_) buckets_ = {{0, full_}};
    }
}

const Subspace& FilteredComplex::level(int p) const {
    if (p <= 0) return levels_.front();
    if (p >= int(levels_.size())) return zero_;
    return levels_[p];
}

int FilteredComplex::bucket_below(int b) const {
    if (buckets_.size() == 1) return 0;
    int deg = buckets_[b].first;
    int want = mod2_ ? ((deg - 1) % 2 + 2) % 2 : deg - 1;
    for (std::size_t i = 0; i < buckets_.size(); ++i)
        if (buckets_[i].first == want) return int(i);
    return -1;
}

void FilteredComplex::validate() const {
    if (levels_.front().dim() != n_)
        throw std::invalid_argument("filtration must start at the whole space");
    for (std::size_t i = 0; i + 1 < levels_.size(); ++i)
        if (!contains(levels_[i], levels_[i + 1]))
            throw std::invalid_argument("filtration level " + std::to_string(i + 1) +
                                        " not contained in level " + std::to_string(i));
    if (!(d_ * d_).is_zero()) throw std::invalid_argument("D∘D != 0");
    for (std::size_t i = 0; i < levels_.size(); ++i)
        if (!contains(levels_[i], image(d_, levels_[i])))
            throw std::invalid_argument("filtration level " + std::to_string(i) +
                                        " not closed under the differential");
}

std::size_t FilteredComplex::graded_homology(int p, int b) const {
    Subspace z = kernel(d_);
    Subspace bd = image(d_, full_);
    Subspace slice = buckets_[b].second;
    Subspace num = sum(intersect(intersect(level(p), slice), z), bd);
    Subspace den = sum(intersect(intersect(level(p + 1), slice), z), bd);
    return num.dim() - den.dim();
}

namespace {

// A_r^{p,b} = F_p ∩ slice_b ∩ D^{-1}(F_{p+r})
Subspace approx_cycles(const FilteredComplex& f, int r, int p, int b) {
    Subspace s = intersect(f.level(p), f.buckets()[b].second);
    return intersect(s, preimage(f.differential(), f.level(p + r)));
}

}  // namespace

std::vector<SpectralPage> spectral_sequence(const FilteredComplex& f, int max_page) {
    std::vector<SpectralPage> pages;
    int nb = int(f.buckets().size());
    int m = f.depth();

    for (int page = 1; page <= max_page; ++page) {
        int r = page - 1;  // standard index: the differential shifts level by r
        SpectralPage pg;
        pg.page_index = page;

        // term data, kept to build differentials
        std::map<std::pair<int, int>, Matrix> reps;
        std::map<std::pair<int, int>, Subspace> dens;

        for (int p = 0; p <= m; ++p) {
            for (int b = 0; b < nb; ++b) {
                Subspace num, den;
                if (r == 0) {
                    num = intersect(f.level(p), f.buckets()[b].second);
                    den = intersect(f.level(p + 1), f.buckets()[b].second);
                } else {
                    num = approx_cycles(f, r, p, b);
                    int bb = f.bucket_below(b) < 0 ? b : f.bucket_below(b);
                    // boundaries from r-1 levels below land in the bucket
                    // holding degree+1; search the bucket whose "below" is b.
                    int b_above = b;
                    if (nb > 1) {
                        b_above = -1;
                        for (int q = 0; q < nb; ++q)
                            if (f.bucket_below(q) == b) b_above = q;
                    }
                    (void)bb;
                    Subspace bdry = (b_above < 0)
                                        ? zero_space(f.ambient())
                                        : image(f.differential(),
                                                approx_cycles(f, r - 1, p - r + 1, b_above));
                    den = sum(approx_cycles(f, r - 1, p + 1, b), bdry);
                }
                int deg = f.buckets()[b].first;
                pg.terms[{p, deg}] = num.dim() - intersect(num, den).dim();
                reps[{p, b}] = quotient_representatives(num, den);
                dens[{p, b}] = den;
            }
        }

        // differential d_page : (p, deg) -> (p + r, deg - 1)
        for (int p = 0; p <= m; ++p) {
            for (int b = 0; b < nb; ++b) {
                int deg = f.buckets()[b].first;
                int tb = f.bucket_below(b) < 0 ? b : f.bucket_below(b);
                int tp = p + r;
                const Matrix& from = reps[{p, b}];
                if (tp > m) {
                    pg.differentials[{p, deg}] = Matrix(0, from.rows());
                    continue;
                }
                const Matrix& to = reps[{tp, tb}];
                Matrix dmat(to.rows(), from.rows());
                for (std::size_t j = 0; j < from.rows(); ++j) {
                    BitVec x = bitvec(f.ambient());
                    for (std::size_t c = 0; c < from.cols(); ++c)
                        if (from.get(j, c)) bit_set(x, c, true);
                    BitVec y = f.differential().apply(x);
                    BitVec coords = quotient_coordinates(to, dens[{tp, tb}], y);
                    for (std::size_t i = 0; i < to.rows(); ++i)
                        if (bit_get(coords, i)) dmat.set(i, j, true);
                }
                pg.differentials[{p, deg}] = dmat;
            }
        }
        pages.push_back(std::move(pg));
    }
    return pages;
}

}  // namespace gp::f2
