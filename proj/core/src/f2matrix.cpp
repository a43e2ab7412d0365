#include "gaugepoly/f2matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gp::f2 {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * ((cols + 63) / 64), 0) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::string>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row bitstring length mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            char ch = rows[r][c];
            if (ch != '0' && ch != '1') throw std::invalid_argument("bad bit character");
            if (ch == '1') m.set(r, c, true);
        }
    }
    return m;
}

bool Matrix::get(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return (rowp(r)[c >> 6] >> (c & 63)) & 1u;
}

void Matrix::set(std::size_t r, std::size_t c, bool v) {
    assert(r < rows_ && c < cols_);
    uint64_t mask = uint64_t(1) << (c & 63);
    if (v)
        rowp(r)[c >> 6] |= mask;
    else
        rowp(r)[c >> 6] &= ~mask;
}

void Matrix::xor_row(std::size_t dst, std::size_t src) {
    uint64_t* d = rowp(dst);
    const uint64_t* s = rowp(src);
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

bool Matrix::is_zero() const {
    for (uint64_t x : w_)
        if (x) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    Matrix m = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) m.w_[i] ^= o.w_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
    Matrix m(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        uint64_t* out = m.rowp(r);
        const uint64_t* a = rowp(r);
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((a[k >> 6] >> (k & 63)) & 1u) {
                const uint64_t* b = o.rowp(k);
                for (std::size_t i = 0; i < m.wpr_; ++i) out[i] ^= b[i];
            }
        }
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) m.set(c, r, true);
    return m;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols_ != bottom.cols_ && top.rows_ != 0 && bottom.rows_ != 0)
        throw std::invalid_argument("vstack column mismatch");
    std::size_t cols = top.rows_ ? top.cols_ : bottom.cols_;
    Matrix m(top.rows_ + bottom.rows_, cols);
    for (std::size_t r = 0; r < top.rows_; ++r)
        std::copy(top.rowp(r), top.rowp(r) + top.wpr_, m.rowp(r));
    for (std::size_t r = 0; r < bottom.rows_; ++r)
        std::copy(bottom.rowp(r), bottom.rowp(r) + bottom.wpr_, m.rowp(top.rows_ + r));
    return m;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
    if (left.rows_ != right.rows_) throw std::invalid_argument("hstack row mismatch");
    Matrix m(left.rows_, left.cols_ + right.cols_);
    for (std::size_t r = 0; r < m.rows_; ++r) {
        for (std::size_t c = 0; c < left.cols_; ++c)
            if (left.get(r, c)) m.set(r, c, true);
        for (std::size_t c = 0; c < right.cols_; ++c)
            if (right.get(r, c)) m.set(r, left.cols_ + c, true);
    }
    return m;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c)
            if (a.get(r, c)) m.set(r, c, true);
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c)
            if (b.get(r, c)) m.set(a.rows_ + r, a.cols_ + c, true);
    return m;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    assert(r0 + nr <= rows_ && c0 + nc <= cols_);
    Matrix m(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            if (get(r0 + r, c0 + c)) m.set(r, c, true);
    return m;
}

namespace {

// In-place row reduction to reduced echelon form. Returns pivot columns.
std::vector<std::size_t> reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && !m.get(sel, col)) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row) {
            // swap rows sel,row by xor trick (cheap enough at these sizes)
            m.xor_row(row, sel);
            m.xor_row(sel, row);
            m.xor_row(row, sel);
        }
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != row && m.get(r, col)) m.xor_row(r, row);
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return reduce(m).size();
}

Matrix Matrix::kernel_basis() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots = reduce(m);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::size_t nfree = cols_ - pivots.size();
    Matrix ker(nfree, cols_);
    std::size_t kr = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        ker.set(kr, c, true);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            if (m.get(pr, c)) ker.set(kr, pivots[pr], true);
        ++kr;
    }
    return ker;
}

Matrix Matrix::row_space_basis() const {
    Matrix m = *this;
    std::size_t r = reduce(m).size();
    return m.submatrix(0, 0, r, cols_);
}

bool Matrix::solve(const std::vector<uint64_t>& b_bits, std::vector<uint64_t>& x_bits) const {
    // Solve Ax = b by reducing [A | b].
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::copy(rowp(r), rowp(r) + wpr_, aug.rowp(r));
        // clear any tail bits then place b
        if (bit_get(b_bits, r)) aug.set(r, cols_, true);
    }
    std::vector<std::size_t> pivots = reduce(aug);
    x_bits = bitvec(cols_);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
        if (pivots[pr] == cols_) return false;  // pivot in the b column: inconsistent
        if (aug.get(pr, cols_)) bit_set(x_bits, pivots[pr], true);
    }
    return true;
}

std::string Matrix::row_string(std::size_t r) const {
    std::string s(cols_, '0');
    for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) s[c] = '1';
    return s;
}

std::vector<uint64_t> Matrix::apply(const std::vector<uint64_t>& x) const {
    BitVec y = bitvec(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const uint64_t* row = rowp(r);
        uint64_t acc = 0;
        for (std::size_t i = 0; i < wpr_ && i < x.size(); ++i) acc ^= row[i] & x[i];
        acc ^= acc >> 32;
        acc ^= acc >> 16;
        acc ^= acc >> 8;
        acc ^= acc >> 4;
        acc ^= acc >> 2;
        acc ^= acc >> 1;
        if (acc & 1) bit_set(y, r, true);
    }
    return y;
}

BitVec bitvec(std::size_t nbits) { return BitVec((nbits + 63) / 64, 0); }

bool bit_get(const BitVec& v, std::size_t i) {
    if ((i >> 6) >= v.size()) return false;
    return (v[i >> 6] >> (i & 63)) & 1u;
}

void bit_set(BitVec& v, std::size_t i, bool val) {
    uint64_t mask = uint64_t(1) << (i & 63);
    if (val)
        v[i >> 6] |= mask;
    else
        v[i >> 6] &= ~mask;
}

void bit_xor(BitVec& dst, const BitVec& src) {
    for (std::size_t i = 0; i < dst.size() && i < src.size(); ++i) dst[i] ^= src[i];
}

bool bit_iszero(const BitVec& v) {
    for (uint64_t x : v)
        if (x) return false;
    return true;
}

Subspace span_of_rows(const Matrix& rows, std::size_t ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = rows.rows() ? rows.row_space_basis() : Matrix(0, ambient);
    if (s.basis.cols() != ambient && s.basis.rows() != 0)
        throw std::invalid_argument("span ambient dimension mismatch");
    if (s.basis.rows() == 0) s.basis = Matrix(0, ambient);
    return s;
}

Subspace full_space(std::size_t n) { return {Matrix::identity(n), n}; }
Subspace zero_space(std::size_t n) { return {Matrix(0, n), n}; }

Subspace sum(const Subspace& a, const Subspace& b) {
    return span_of_rows(Matrix::vstack(a.basis, b.basis), a.ambient);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    // x in A∩B  <=>  x = uA = vB. Kernel of [A^T | B^T] pairs (u,v) with
    // uA + vB = 0; then uA spans the intersection.
    if (a.dim() == 0 || b.dim() == 0) return zero_space(a.ambient);
    Matrix stacked = Matrix::vstack(a.basis, b.basis);      // (da+db) x n
    Matrix ker = stacked.transpose().kernel_basis();        // rows: (u,v)
    Matrix out(ker.rows(), a.ambient);
    for (std::size_t r = 0; r < ker.rows(); ++r)
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (ker.get(r, i))
                for (std::size_t c = 0; c < a.ambient; ++c)
                    if (a.basis.get(i, c)) out.set(r, c, !out.get(r, c));
    return span_of_rows(out, a.ambient);
}

bool contains(const Subspace& big, const Subspace& small) {
    return sum(big, small).dim() == big.dim();
}

bool member(const Subspace& s, const BitVec& v) {
    Matrix one(1, s.ambient);
    for (std::size_t c = 0; c < s.ambient; ++c)
        if (bit_get(v, c)) one.set(0, c, true);
    return sum(s, span_of_rows(one, s.ambient)).dim() == s.dim();
}

Subspace image(const Matrix& m, const Subspace& s) {
    // Column convention: vectors x with m.cols() bits map to y = Mx with
    // m.rows() bits. Image of the row-basis of s.
    Matrix out(s.dim(), m.rows());
    for (std::size_t r = 0; r < s.dim(); ++r) {
        BitVec x = bitvec(m.cols());
        for (std::size_t c = 0; c < s.ambient; ++c)
            if (s.basis.get(r, c)) bit_set(x, c, true);
        BitVec y = m.apply(x);
        for (std::size_t c = 0; c < m.rows(); ++c)
            if (bit_get(y, c)) out.set(r, c, true);
    }
    return span_of_rows(out, m.rows());
}

Subspace preimage(const Matrix& m, const Subspace& w) {
    // {x : Mx ∈ span(W)} = x-projection of kernel of [M | W^T].
    if (w.ambient != m.rows()) throw std::invalid_argument("preimage ambient mismatch");
    Matrix aug = Matrix::hstack(m, w.basis.transpose());
    Matrix ker = aug.kernel_basis();  // rows (x, c)
    Matrix out(ker.rows(), m.cols());
    for (std::size_t r = 0; r < ker.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (ker.get(r, c)) out.set(r, c, true);
    return span_of_rows(out, m.cols());
}

Subspace kernel(const Matrix& m) { return span_of_rows(m.kernel_basis(), m.cols()); }

std::size_t dim_mod(const Subspace& a, const Subspace& c) {
    return sum(a, c).dim() - span_of_rows(c.basis, c.ambient).dim();
}

Matrix quotient_representatives(const Subspace& a, const Subspace& c) {
    Matrix reps(0, a.ambient);
    Subspace acc = intersect(a, c);  // start from a∩c, grow with rows of a
    Subspace grown = acc;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        Matrix row = a.basis.submatrix(r, 0, 1, a.ambient);
        Subspace cand = sum(grown, span_of_rows(row, a.ambient));
        if (cand.dim() > grown.dim()) {
            reps = Matrix::vstack(reps.rows() ? reps : Matrix(0, a.ambient), row);
            grown = cand;
        }
    }
    return reps;
}

BitVec quotient_coordinates(const Matrix& reps, const Subspace& c, const BitVec& v) {
    // Solve v = sum coeff_i reps_i + (element of c):  [reps^T | c^T] (coeff, u) = v
    Matrix a = reps.rows() ? Matrix::hstack(reps.transpose(), c.basis.transpose())
                           : c.basis.transpose();
    BitVec rhs = bitvec(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) bit_set(rhs, i, bit_get(v, i));
    BitVec sol;
    if (!a.solve(rhs, sol)) throw std::logic_error("quotient_coordinates: vector not in span");
    BitVec coeff = bitvec(reps.rows());
    for (std::size_t i = 0; i < reps.rows(); ++i) bit_set(coeff, i, bit_get(sol, i));
    return coeff;
}

}  // namespace gp::f2
