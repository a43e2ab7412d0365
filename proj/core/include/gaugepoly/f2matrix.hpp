#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gp::f2 {

// Dense matrix over GF(2), bit-packed row-major: row r is a sequence of
// 64-bit words, column c lives in word c/64 at bit c%64. Row operations are
// word-parallel xors, which is all Gaussian elimination needs here.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    // Rows given as bitstrings like "0110". All rows must share one length.
    static Matrix from_rows(const std::vector<std::string>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);
    void xor_row(std::size_t dst, std::size_t src);  // row dst += row src

    bool is_zero() const;
    bool operator==(const Matrix& o) const = default;

    Matrix operator+(const Matrix& o) const;  // entrywise xor
    Matrix operator*(const Matrix& o) const;
    Matrix transpose() const;

    // Vertical / horizontal / diagonal concatenation.
    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    static Matrix hstack(const Matrix& left, const Matrix& right);
    static Matrix block_diag(const Matrix& a, const Matrix& b);
    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    std::size_t rank() const;
    std::size_t nullity() const { return cols_ - rank(); }

    // Basis of the right kernel {x : Ax = 0}, as rows of the result.
    Matrix kernel_basis() const;
    // Basis of the row space, in reduced echelon form with pivot-order rows.
    Matrix row_space_basis() const;

    // One solution x of Ax = b (b has rows()==this->rows(), cols()==1 view as
    // bit vector). Returns false if inconsistent.
    bool solve(const std::vector<uint64_t>& b_bits, std::vector<uint64_t>& x_bits) const;

    // Row r as a bitstring of length cols().
    std::string row_string(std::size_t r) const;

    const std::vector<uint64_t>& words() const { return w_; }

    // Matrix-vector product over bit-packed vectors (length cols() bits).
    std::vector<uint64_t> apply(const std::vector<uint64_t>& x) const;

    std::size_t words_per_row() const { return wpr_; }

  private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> w_;
    uint64_t* rowp(std::size_t r) { return w_.data() + r * wpr_; }
    const uint64_t* rowp(std::size_t r) const { return w_.data() + r * wpr_; }
};

// Bit vector helpers (length tracked by caller).
using BitVec = std::vector<uint64_t>;
BitVec bitvec(std::size_t nbits);
bool bit_get(const BitVec& v, std::size_t i);
void bit_set(BitVec& v, std::size_t i, bool val);
void bit_xor(BitVec& dst, const BitVec& src);
bool bit_iszero(const BitVec& v);

// Span calculus on subspaces of F2^n, vectors as rows of matrices.
//
// These are the workhorses of the homology and spectral-sequence code: every
// subspace is a row-basis matrix with ambient dimension n.
struct Subspace {
    Matrix basis;         // rows form a basis (reduced echelon form)
    std::size_t ambient;  // dimension of the ambient space

    std::size_t dim() const { return basis.rows(); }
};

Subspace span_of_rows(const Matrix& rows, std::size_t ambient);
Subspace full_space(std::size_t n);
Subspace zero_space(std::size_t n);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& big, const Subspace& small);
bool member(const Subspace& s, const BitVec& v);

// Image of a subspace under the linear map m (vectors are rows: x -> x M^T is
// avoided; we use column convention y = M x, so vectors have m.cols() bits).
Subspace image(const Matrix& m, const Subspace& s);
// Preimage {x : Mx in W}.
Subspace preimage(const Matrix& m, const Subspace& w);
// Kernel of m as a subspace of F2^{cols}.
Subspace kernel(const Matrix& m);

// dim( (a + c) / c )  ==  dim(a+c) - dim(c): dimension of a modulo c.
std::size_t dim_mod(const Subspace& a, const Subspace& c);

// Basis of a complement of (a ∩ c) in a: vectors of a spanning a/(a∩c).
// Returned rows are vectors of `a` that are independent modulo c.
Matrix quotient_representatives(const Subspace& a, const Subspace& c);

// Coordinates of v in the quotient basis `reps` modulo subspace c.
// Requires v ∈ span(reps) + c. Returns the coefficient bit vector.
BitVec quotient_coordinates(const Matrix& reps, const Subspace& c, const BitVec& v);

}  // namespace gp::f2
