#pragma once

#include "hk/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hk {

using QVector = std::vector<Rational>;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Dense rational matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);
    static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    QVector column(std::size_t j) const;
    QVector row(std::size_t i) const;
    QMatrix transpose() const;
    Rational trace() const;
    bool is_zero() const;

    QMatrix operator*(const QMatrix& o) const;
    QVector operator*(const QVector& v) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix scaled(const Rational& s) const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

// Reduced row echelon form with first-nonzero pivoting; pivots receives pivot columns.
QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const QMatrix& m);
std::vector<QVector> kernel_basis(const QMatrix& m);
Rational determinant(const QMatrix& m);
QMatrix inverse(const QMatrix& m);

// Coefficients c_0..c_n of det(t*1 - m); c_n = 1.
std::vector<Rational> char_poly(const QMatrix& m);

// Solves m x = b; returns false if inconsistent. One particular solution (free vars 0).
bool solve(const QMatrix& m, const QVector& b, QVector& x);

// Basis of the span of the given vectors (row-reduced, deterministic).
std::vector<QVector> span_basis(const std::vector<QVector>& vecs, std::size_t dim);

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector scale(const QVector& v, const Rational& s);
bool is_zero(const QVector& v);

std::string to_string(const QMatrix& m);

}  // namespace hk
