#include "entcert/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace entcert {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
        for (const auto& e : row) entries_.push_back(e);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::conj() const {
    Matrix c(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) c(i, j) = (*this)(i, j).conj();
    return c;
}

Matrix Matrix::conj_transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
    return t;
}

Scalar Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Scalar t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::is_hermitian() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i).conj()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in *");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (!bkj.is_zero()) c(i, j) += aik * bkj;
            }
        }
    return c;
}

Matrix operator*(const Scalar& c, Matrix m) {
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) *= c;
    return m;
}

namespace {

// Gaussian integer, the working type of fraction-free elimination.
struct GInt {
    Int re, im;
    bool is_zero() const { return re == 0 && im == 0; }
};

// Exact division in Z[i]; Bareiss guarantees exactness when dividing by the
// previous pivot.
GInt gdiv_exact(const GInt& x, const GInt& p) {
    GInt out;
    if (p.im == 0) {
        mpz_divexact(out.re.get_mpz_t(), x.re.get_mpz_t(), p.re.get_mpz_t());
        mpz_divexact(out.im.get_mpz_t(), x.im.get_mpz_t(), p.re.get_mpz_t());
        return out;
    }
    Int norm = p.re * p.re + p.im * p.im;
    Int tre = x.re * p.re + x.im * p.im;
    Int tim = x.im * p.re - x.re * p.im;
    mpz_divexact(out.re.get_mpz_t(), tre.get_mpz_t(), norm.get_mpz_t());
    mpz_divexact(out.im.get_mpz_t(), tim.get_mpz_t(), norm.get_mpz_t());
    return out;
}

GInt gmul(const GInt& a, const GInt& b) {
    if (a.im == 0 && b.im == 0) return {a.re * b.re, Int(0)};
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// Clears denominators row by row; scaling rows by positive rationals does not
// change the rank. Optionally reports the scale applied to each row.
std::vector<std::vector<GInt>> to_gaussian_rows(const Matrix& m,
                                                std::vector<Int>* rowScales = nullptr) {
    std::vector<std::vector<GInt>> rows(m.rows(), std::vector<GInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& s = m(i, j);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.re.get_den().get_mpz_t());
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.im.get_den().get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& s = m(i, j);
            rows[i][j].re = s.re.get_num() * (lcm / s.re.get_den());
            rows[i][j].im = s.im.get_num() * (lcm / s.im.get_den());
        }
        if (rowScales) rowScales->push_back(lcm);
    }
    return rows;
}

// Fraction-free elimination; returns the pivots found (rank) and, when
// trackSign is set, whether the row swaps flipped the determinant's sign.
std::size_t bareiss(std::vector<std::vector<GInt>>& m, bool* signFlip = nullptr) {
    const std::size_t nrows = m.size();
    const std::size_t ncols = nrows ? m[0].size() : 0;
    GInt prev{Int(1), Int(0)};
    std::size_t r = 0;
    bool flip = false;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && m[piv][c].is_zero()) ++piv;
        if (piv == nrows) continue;
        if (piv != r) {
            std::swap(m[piv], m[r]);
            flip = !flip;
        }
        for (std::size_t i = r + 1; i < nrows; ++i) {
            if (m[i][c].is_zero()) {
                // Still needs the Bareiss rescale to keep later divisions exact.
                for (std::size_t j = c + 1; j < ncols; ++j)
                    if (!m[i][j].is_zero()) m[i][j] = gdiv_exact(gmul(m[r][c], m[i][j]), prev);
                continue;
            }
            for (std::size_t j = c + 1; j < ncols; ++j) {
                GInt t = gmul(m[r][c], m[i][j]);
                GInt u = gmul(m[i][c], m[r][j]);
                t.re -= u.re;
                t.im -= u.im;
                m[i][j] = gdiv_exact(t, prev);
            }
            m[i][c] = GInt{Int(0), Int(0)};
        }
        prev = m[r][c];
        ++r;
    }
    if (signFlip) *signFlip = flip;
    return r;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto g = to_gaussian_rows(m);
    return bareiss(g);
}

Scalar determinant(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() == 0) return Scalar(1);
    std::vector<Int> rowScales;
    auto g = to_gaussian_rows(m, &rowScales);
    Rational scale(1);
    for (const Int& s : rowScales) scale *= Rational(s);
    bool flip = false;
    std::size_t r = bareiss(g, &flip);
    if (r < m.rows()) return Scalar(0);
    // After full-rank Bareiss the last pivot equals the determinant of the
    // integer matrix (up to swaps).
    Scalar det(Rational(g[m.rows() - 1][m.cols() - 1].re), Rational(g[m.rows() - 1][m.cols() - 1].im));
    if (flip) det = -det;
    return Scalar(Rational(1) / scale) * det;
}

Rref rref(const Matrix& m) {
    Rref out;
    out.mat = m;
    Matrix& a = out.mat;
    const std::size_t nrows = a.rows();
    const std::size_t ncols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && a(piv, c).is_zero()) ++piv;
        if (piv == nrows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < ncols; ++j) std::swap(a(r, j), a(piv, j));
        Scalar inv = Scalar(1) / a(r, c);
        for (std::size_t j = c; j < ncols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Scalar f = a(i, c);
            for (std::size_t j = c; j < ncols; ++j) a(i, j) -= f * a(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    return out;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    const std::size_t ncols = m.cols();
    Rref red = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : red.pivot_cols) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(ncols, Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t j = 0; j < red.pivot_cols.size(); ++j)
            v[red.pivot_cols[j]] = -red.mat(j, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Vector vectorize(const Matrix& m) {
    Vector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m(i, j));
    return v;
}

Matrix column_stack(const std::vector<Matrix>& ms) {
    if (ms.empty()) throw std::invalid_argument("column_stack of empty list");
    const std::size_t r = ms.front().rows();
    const std::size_t c = ms.front().cols();
    Matrix out(r * c, ms.size());
    for (std::size_t k = 0; k < ms.size(); ++k) {
        if (ms[k].rows() != r || ms[k].cols() != c)
            throw std::invalid_argument("column_stack: shape mismatch at index " +
                                        std::to_string(k));
        std::size_t idx = 0;
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < r; ++i) out(idx++, k) = ms[k](i, j);
    }
    return out;
}

std::size_t span_rank(const std::vector<Matrix>& ms) {
    return rank(column_stack(ms));
}

Matrix outer_product(const Vector& a, const Vector& b) {
    Matrix m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) m(i, j) = a[i] * b[j].conj();
    }
    return m;
}

Scalar dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i].conj() * b[i];
    return s;
}

std::vector<Scalar> leading_principal_minors(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("principal minors of non-square matrix");
    std::vector<Scalar> minors;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        Matrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
        minors.push_back(determinant(sub));
    }
    return minors;
}

bool hermitian_psd_minor_check(const Matrix& m) {
    if (!m.is_hermitian()) return false;
    for (const Scalar& d : leading_principal_minors(m)) {
        if (d.im != 0) return false;  // cannot happen for Hermitian input
        if (d.re < 0) return false;
    }
    return true;
}

}  // namespace entcert
