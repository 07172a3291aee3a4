#include "hk/qmatrix.hpp"

#include <sstream>
#include <utility>

namespace hk {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t rows) {
    QMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw DimensionError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

QVector QMatrix::column(std::size_t j) const {
    QVector v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

QVector QMatrix::row(std::size_t i) const {
    return QVector(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

QMatrix QMatrix::transpose() const {
    QMatrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rational QMatrix::trace() const {
    if (!square()) throw DimensionError("trace of non-square matrix");
    Rational s;
    for (std::size_t i = 0; i < r_; ++i) s += (*this)(i, i);
    return s;
}

bool QMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (c_ != o.r_) throw DimensionError("matrix product dimension mismatch");
    QMatrix p(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.c_; ++j)
                if (!o(k, j).is_zero()) p(i, j) += x * o(k, j);
        }
    return p;
}

QVector QMatrix::operator*(const QVector& v) const {
    if (c_ != v.size()) throw DimensionError("matrix-vector dimension mismatch");
    QVector out(r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw DimensionError("matrix sum dimension mismatch");
    QMatrix s = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) s.a_[k] += o.a_[k];
    return s;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw DimensionError("matrix difference dimension mismatch");
    QMatrix s = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) s.a_[k] -= o.a_[k];
    return s;
}

QMatrix QMatrix::scaled(const Rational& s) const {
    QMatrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
}

QMatrix rref(const QMatrix& in, std::vector<std::size_t>* pivots) {
    QMatrix m = in;
    std::size_t row = 0;
    if (pivots) pivots->clear();
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        Rational inv = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return m;
}

std::size_t rank(const QMatrix& m) {
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
    std::vector<std::size_t> piv;
    QMatrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const QMatrix& in) {
    if (!in.square()) throw DimensionError("determinant of non-square matrix");
    QMatrix m = in;
    std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            Rational f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

QMatrix inverse(const QMatrix& m) {
    if (!m.square()) throw DimensionError("inverse of non-square matrix");
    std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    QMatrix r = rref(aug, &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

// Reduction to upper Hessenberg form by similarity, then the standard
// determinant recurrence on the leading principal submatrices.
std::vector<Rational> char_poly(const QMatrix& in) {
    if (!in.square()) throw DimensionError("char_poly of non-square matrix");
    std::size_t n = in.rows();
    QMatrix h = in;
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t p = j + 1;
        while (p < n && h(p, j).is_zero()) ++p;
        if (p == n) continue;
        if (p != j + 1) {
            for (std::size_t k = 0; k < n; ++k) std::swap(h(p, k), h(j + 1, k));
            for (std::size_t k = 0; k < n; ++k) std::swap(h(k, p), h(k, j + 1));
        }
        for (std::size_t i = j + 2; i < n; ++i) {
            if (h(i, j).is_zero()) continue;
            Rational u = h(i, j) / h(j + 1, j);
            for (std::size_t k = 0; k < n; ++k) h(i, k) -= u * h(j + 1, k);
            for (std::size_t k = 0; k < n; ++k) h(k, j + 1) += u * h(k, i);
        }
    }
    // polys[m] = char poly of leading m x m block, low-to-high coefficients.
    std::vector<std::vector<Rational>> polys(n + 1);
    polys[0] = {Rational(1)};
    for (std::size_t m = 1; m <= n; ++m) {
        const auto& prev = polys[m - 1];
        std::vector<Rational> cur(m + 1);
        for (std::size_t k = 0; k < prev.size(); ++k) {
            cur[k + 1] += prev[k];
            cur[k] -= h(m - 1, m - 1) * prev[k];
        }
        Rational t = 1;
        for (std::size_t i = 1; i < m; ++i) {
            t *= h(m - i, m - i - 1);
            if (t.is_zero()) break;
            Rational f = t * h(m - i - 1, m - 1);
            if (f.is_zero()) continue;
            const auto& q = polys[m - i - 1];
            for (std::size_t k = 0; k < q.size(); ++k) cur[k] -= f * q[k];
        }
        polys[m] = std::move(cur);
    }
    return polys[n];
}

bool solve(const QMatrix& m, const QVector& b, QVector& x) {
    if (b.size() != m.rows()) throw DimensionError("solve: rhs length mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> piv;
    QMatrix r = rref(aug, &piv);
    if (!piv.empty() && piv.back() == m.cols()) return false;
    x.assign(m.cols(), Rational(0));
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r(k, m.cols());
    return true;
}

std::vector<QVector> span_basis(const std::vector<QVector>& vecs, std::size_t dim) {
    if (vecs.empty()) return {};
    QMatrix r = rref(QMatrix::from_rows(vecs, dim));
    std::vector<QVector> out;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        QVector row = r.row(i);
        if (is_zero(row)) break;
        out.push_back(std::move(row));
    }
    return out;
}

QVector operator+(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector sum length mismatch");
    QVector s = a;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
    return s;
}

QVector operator-(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector difference length mismatch");
    QVector s = a;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] -= b[i];
    return s;
}

QVector scale(const QVector& v, const Rational& s) {
    QVector out = v;
    for (auto& x : out) x *= s;
    return out;
}

bool is_zero(const QVector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::string to_string(const QMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace hk
