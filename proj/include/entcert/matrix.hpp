#ifndef ENTCERT_MATRIX_HPP
#define ENTCERT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "entcert/scalar.hpp"

namespace entcert {

using Vector = std::vector<Scalar>;

/// Dense matrix of exact complex-rational scalars, row-major.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    const std::vector<Scalar>& entries() const { return entries_; }

    Matrix transpose() const;
    Matrix conj() const;
    Matrix conj_transpose() const;
    Scalar trace() const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_hermitian() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, Matrix m);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

/// Exact rank over the complex rationals, by fraction-free (Bareiss)
/// elimination on a denominator-cleared copy. Pivot rule: first nonzero
/// entry scanning rows top-down within the leftmost unresolved column.
std::size_t rank(const Matrix& m);

/// Exact determinant (square input), fraction-free.
Scalar determinant(const Matrix& m);

/// Basis of the right null space { v : m v = 0 }. Returns exactly
/// cols - rank(m) vectors, deterministic for a given entry order: the
/// RREF free-column construction under the same pivot rule as rank().
std::vector<Vector> kernel_basis(const Matrix& m);

/// Reduced row echelon form (exact). Exposed for reuse and cross-checks.
struct Rref {
    Matrix mat;
    std::vector<std::size_t> pivot_cols;
};
Rref rref(const Matrix& m);

/// Column-major stacking: [a_11, ..., a_m1, a_12, ..., a_m2, ...].
Vector vectorize(const Matrix& m);

/// Matrix whose i-th column is vectorize(ms[i]). All inputs must share shape.
Matrix column_stack(const std::vector<Matrix>& ms);

/// rank() of the span of a family, i.e. rank(column_stack(ms)).
std::size_t span_rank(const std::vector<Matrix>& ms);

Matrix outer_product(const Vector& a, const Vector& b);  // a b^dagger
Scalar dot(const Vector& a, const Vector& b);            // conj(a) . b

/// Leading principal minors det(m[0..j, 0..j]) for j = 1..n.
std::vector<Scalar> leading_principal_minors(const Matrix& m);

/// Sylvester-style test used on constructed Hermitian measurement operators:
/// Hermitian and every leading principal minor >= 0. A genuinely PSD matrix
/// always passes; the callers only feed matrices that are PSD by construction.
bool hermitian_psd_minor_check(const Matrix& m);

}  // namespace entcert

#endif
