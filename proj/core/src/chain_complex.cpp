#include "gaugepoly/chain_complex.hpp"

#include <stdexcept>

namespace gp::f2 {

namespace {
int canon_deg(Grading g, int deg) {
    if (g == Grading::Mod2) return ((deg % 2) + 2) % 2;
    return deg;
}
}  // namespace

ChainComplex::ChainComplex(Grading g, std::map<int, std::size_t> dims, std::map<int, Matrix> diffs)
    : grading_(g) {
    for (auto& [d, n] : dims) dims_[canon_deg(g, d)] += 0, dims_[canon_deg(g, d)] = n;
    for (auto& [d, m] : diffs) diffs_[canon_deg(g, d)] = m;
    if (g == Grading::Mod2) {
        // 2-periodic canonical form always carries both parities.
        dims_.try_emplace(0, 0);
        dims_.try_emplace(1, 0);
    }
    index();
}

ChainComplex ChainComplex::concentrated(Grading g, int deg, std::size_t dim) {
    std::map<int, std::size_t> dims;
    dims[deg] = dim;
    return ChainComplex(g, std::move(dims), {});
}

void ChainComplex::index() {
    total_ = 0;
    offsets_.clear();
    for (auto& [d, n] : dims_) {
        offsets_[d] = total_;
        total_ += n;
    }
}

int ChainComplex::shift_deg(int deg, int by) const { return canon_deg(grading_, deg + by); }

std::size_t ChainComplex::dim(int deg) const {
    auto it = dims_.find(canon_deg(grading_, deg));
    return it == dims_.end() ? 0 : it->second;
}

Matrix ChainComplex::diff(int deg) const {
    int d = canon_deg(grading_, deg);
    auto it = diffs_.find(d);
    if (it != diffs_.end()) return it->second;
    return Matrix(dim(shift_deg(d, -1)), dim(d));
}

std::size_t ChainComplex::offset(int deg) const {
    auto it = offsets_.find(canon_deg(grading_, deg));
    if (it == offsets_.end()) throw std::out_of_range("no such degree");
    return it->second;
}

std::vector<int> ChainComplex::degrees() const {
    std::vector<int> out;
    for (auto& [d, n] : dims_) out.push_back(d);
    return out;
}

Matrix ChainComplex::flat_diff() const {
    Matrix m(total_, total_);
    for (auto& [d, n] : dims_) {
        if (n == 0) continue;
        int tgt = shift_deg(d, -1);
        if (dim(tgt) == 0) continue;
        Matrix blk = diff(d);
        std::size_t ro = offset(tgt), co = offset(d);
        for (std::size_t r = 0; r < blk.rows(); ++r)
            for (std::size_t c = 0; c < blk.cols(); ++c)
                if (blk.get(r, c)) m.set(ro + r, co + c, true);
    }
    return m;
}

void ChainComplex::validate() const {
    for (auto& [d, mat] : diffs_) {
        std::size_t want_rows = dim(shift_deg(d, -1));
        std::size_t want_cols = dim(d);
        if (mat.rows() != want_rows || mat.cols() != want_cols)
            throw std::invalid_argument("differential shape mismatch in degree " +
                                        std::to_string(d) + ": got " + std::to_string(mat.rows()) +
                                        "x" + std::to_string(mat.cols()) + ", want " +
                                        std::to_string(want_rows) + "x" + std::to_string(want_cols));
    }
    for (auto& [d, n] : dims_) {
        if (n == 0) continue;
        Matrix dd = diff(shift_deg(d, -1)) * diff(d);
        if (!dd.is_zero())
            throw std::invalid_argument("d∘d != 0 starting at degree " + std::to_string(d));
    }
}

std::map<int, std::size_t> ChainComplex::homology() const {
    std::map<int, std::size_t> h;
    for (auto& [d, n] : dims_) {
        std::size_t z = n - diff(d).rank();              // dim ker d_d
        std::size_t b = diff(shift_deg(d, 1)).rank();    // dim im d_{d+1}
        h[d] = z - b;
    }
    return h;
}

std::size_t ChainComplex::total_homology() const {
    std::size_t t = 0;
    for (auto& [d, n] : homology()) t += n;
    return t;
}

bool ChainComplex::acyclic() const { return total_homology() == 0; }

Subspace ChainComplex::cycles(int deg) const {
    return kernel(diff(deg));
}

Subspace ChainComplex::boundaries(int deg) const {
    Matrix up = diff(shift_deg(deg, 1));
    return image(up, full_space(up.cols()));
}

Matrix ChainComplex::homology_representatives(int deg) const {
    return quotient_representatives(cycles(deg), boundaries(deg));
}

ChainComplex ChainComplex::direct_sum(const ChainComplex& other) const {
    if (grading_ != other.grading_) throw std::invalid_argument("direct_sum grading mismatch");
    std::map<int, std::size_t> dims;
    std::map<int, Matrix> diffs;
    auto alldegs = degrees();
    for (int d : other.degrees())
        if (dim(d) == 0 && !dims_.count(d)) alldegs.push_back(d);
    for (int d : alldegs) dims[canon_deg(grading_, d)] = dim(d) + other.dim(d);
    for (auto& [d, n] : dims) {
        if (n == 0) continue;
        diffs[d] = Matrix::block_diag(diff(d), other.diff(d));
    }
    return ChainComplex(grading_, std::move(dims), std::move(diffs));
}

ChainComplex ChainComplex::shifted(int by) const {
    std::map<int, std::size_t> dims;
    std::map<int, Matrix> diffs;
    for (auto& [d, n] : dims_) dims[canon_deg(grading_, d + by)] = n;
    for (auto& [d, m] : diffs_) diffs[canon_deg(grading_, d + by)] = m;
    return ChainComplex(grading_, std::move(dims), std::move(diffs));
}

ChainMap::ChainMap(ChainComplex src, ChainComplex tgt, int degree_shift,
                   std::map<int, Matrix> blocks)
    : src_(std::move(src)), tgt_(std::move(tgt)), shift_(degree_shift) {
    if (src_.grading() != tgt_.grading())
        throw std::invalid_argument("chain map grading mismatch");
    if (src_.grading() == Grading::Mod2) shift_ = ((degree_shift % 2) + 2) % 2;
    for (auto& [d, m] : blocks) blocks_[src_.shift_deg(d, 0)] = m;
    validate();
}

ChainMap ChainMap::zero(const ChainComplex& src, const ChainComplex& tgt, int shift) {
    return ChainMap(src, tgt, shift, {});
}

ChainMap ChainMap::identity(const ChainComplex& c) {
    std::map<int, Matrix> blocks;
    for (int d : c.degrees())
        if (c.dim(d)) blocks[d] = Matrix::identity(c.dim(d));
    return ChainMap(c, c, 0, std::move(blocks));
}

Matrix ChainMap::block(int deg) const {
    int d = src_.shift_deg(deg, 0);
    auto it = blocks_.find(d);
    if (it != blocks_.end()) return it->second;
    return Matrix(tgt_.dim(tgt_.shift_deg(d, shift_)), src_.dim(d));
}

void ChainMap::validate() const {
    for (auto& [d, m] : blocks_) {
        std::size_t wr = tgt_.dim(tgt_.shift_deg(d, shift_));
        std::size_t wc = src_.dim(d);
        if (m.rows() != wr || m.cols() != wc)
            throw std::invalid_argument("chain map block shape mismatch in degree " +
                                        std::to_string(d));
    }
}

bool ChainMap::is_chain_map() const {
    for (int d : src_.degrees()) {
        // d_tgt ∘ f  ==  f ∘ d_src   (degree d -> d+shift-1)
        Matrix lhs = tgt_.diff(tgt_.shift_deg(d, shift_)) * block(d);
        Matrix rhs = block(src_.shift_deg(d, -1)) * src_.diff(d);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

Matrix ChainMap::flat() const {
    Matrix m(tgt_.total_dim(), src_.total_dim());
    for (int d : src_.degrees()) {
        if (src_.dim(d) == 0) continue;
        int td = tgt_.shift_deg(d, shift_);
        if (tgt_.dim(td) == 0) continue;
        Matrix blk = block(d);
        std::size_t ro = tgt_.offset(td), co = src_.offset(d);
        for (std::size_t r = 0; r < blk.rows(); ++r)
            for (std::size_t c = 0; c < blk.cols(); ++c)
                if (blk.get(r, c)) m.set(ro + r, co + c, true);
    }
    return m;
}

Matrix ChainMap::induced_on_homology(int deg) const {
    int sd = src_.shift_deg(deg, 0);
    int td = tgt_.shift_deg(sd, shift_);
    Matrix sreps = src_.homology_representatives(sd);
    Matrix treps = tgt_.homology_representatives(td);
    Subspace tb = tgt_.boundaries(td);
    Matrix out(treps.rows(), sreps.rows());
    Matrix blk = block(sd);
    for (std::size_t j = 0; j < sreps.rows(); ++j) {
        BitVec x = bitvec(blk.cols());
        for (std::size_t c = 0; c < sreps.cols(); ++c)
            if (sreps.get(j, c)) bit_set(x, c, true);
        BitVec y = blk.apply(x);
        BitVec coords = quotient_coordinates(treps, tb, y);
        for (std::size_t i = 0; i < treps.rows(); ++i)
            if (bit_get(coords, i)) out.set(i, j, true);
    }
    return out;
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
    if (shift_ != o.shift_) throw std::invalid_argument("chain map shift mismatch in +");
    std::map<int, Matrix> blocks;
    for (int d : src_.degrees()) {
        Matrix s = block(d) + o.block(d);
        if (!s.is_zero()) blocks[d] = s;
    }
    return ChainMap(src_, tgt_, shift_, std::move(blocks));
}

ChainComplex cone(const ChainMap& f) {
    if (f.degree_shift() != 0) throw std::invalid_argument("cone needs a degree-0 map");
    if (!f.is_chain_map()) throw std::invalid_argument("cone of a non-chain-map");
    const ChainComplex& a = f.source();
    const ChainComplex& b = f.target();
    ChainComplex ashift = a.shifted(1);
    // Cone_d = B_d ⊕ A_{d-1}, differential [[d_B, f],[0, d_A]].
    std::map<int, std::size_t> dims;
    for (int d : b.degrees()) dims[d] = b.dim(d);
    for (int d : ashift.degrees()) dims[d] += ashift.dim(d);
    if (b.grading() == Grading::Mod2) {
        dims.try_emplace(0, 0);
        dims.try_emplace(1, 0);
    }
    std::map<int, Matrix> diffs;
    for (auto& [d, n] : dims) {
        if (n == 0) continue;
        int dm1 = b.shift_deg(d, -1);
        std::size_t rows = b.dim(dm1) + a.dim(b.shift_deg(dm1, -1));
        Matrix m(rows, n);
        Matrix db = b.diff(d);
        Matrix da = a.diff(b.shift_deg(d, -1));
        Matrix fb = f.block(b.shift_deg(d, -1));  // A_{d-1} -> B_{d-1}
        std::size_t bd = b.dim(d);
        for (std::size_t r = 0; r < db.rows(); ++r)
            for (std::size_t c = 0; c < db.cols(); ++c)
                if (db.get(r, c)) m.set(r, c, true);
        for (std::size_t r = 0; r < fb.rows(); ++r)
            for (std::size_t c = 0; c < fb.cols(); ++c)
                if (fb.get(r, c)) m.set(r, bd + c, true);
        std::size_t bdm1 = b.dim(dm1);
        for (std::size_t r = 0; r < da.rows(); ++r)
            for (std::size_t c = 0; c < da.cols(); ++c)
                if (da.get(r, c)) m.set(bdm1 + r, bd + c, true);
        diffs[d] = m;
    }
    ChainComplex out(b.grading(), std::move(dims), std::move(diffs));
    out.validate();
    return out;
}

bool is_quasi_iso(const ChainMap& f) { return cone(f).acyclic(); }

}  // namespace gp::f2
