#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hk/qmatrix.hpp"
#include "hk/qpoly.hpp"

#include <random>

using namespace hk;

namespace {

QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi, int den = 1) {
    std::uniform_int_distribution<int> d(lo, hi), dd(1, den);
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(d(rng), dd(rng));
    return m;
}

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
std::vector<Rational> faddeev_leverrier(const QMatrix& a) {
    std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    QMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + QMatrix::identity(n).scaled(c[n - k + 1]);
        c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
    }
    return c;
}

// Fraction-free elimination on an integer matrix; returns (rank, determinant if square).
std::pair<std::size_t, mpz_class> bareiss(std::vector<std::vector<mpz_class>> a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    mpz_class det = 0;
    if (rows == cols && r == rows) det = sign * a[rows - 1][cols - 1];
    return {r, det};
}

std::vector<std::vector<mpz_class>> to_mpz(const QMatrix& m) {
    std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).num();
    return a;
}

QPoly linear(const Rational& root) { return {-root, Rational(1)}; }

}  // namespace

TEST_CASE("rational parse and render") {
    CHECK(Rational::parse("6/4").to_string() == "3/2");
    CHECK(Rational::parse("-0/5").to_string() == "0");
    CHECK(Rational::parse("-7").to_string() == "-7");
    CHECK_THROWS_AS(Rational::parse("3/-6"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-2, 3) < Rational(-1, 2));
    CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
    CHECK(Rational(-12, 4).to_long() == -3);
}

TEST_CASE("char_poly agrees with Faddeev-LeVerrier") {
    std::mt19937 rng(1234);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + t % 7;
        QMatrix a = random_matrix(rng, n, n, -4, 4, t % 3 == 0 ? 3 : 1);
        CHECK(char_poly(a) == faddeev_leverrier(a));
    }
    QMatrix d(3, 3);
    d(0, 0) = 2;
    d(2, 2) = -2;
    CHECK(char_poly(d) == std::vector<Rational>{0, -4, 0, 1});
}

TEST_CASE("rank and determinant agree with fraction-free elimination") {
    std::mt19937 rng(99);
    for (int t = 0; t < 60; ++t) {
        std::size_t r = 1 + t % 6, c = 1 + (t / 6) % 6;
        QMatrix a = random_matrix(rng, r, c, -2, 2);
        if (t % 4 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * Rational(3) - a(r > 2 ? 1 : 0, j);
        auto [br, bdet] = bareiss(to_mpz(a));
        CHECK(rank(a) == br);
        CHECK(kernel_basis(a).size() == c - br);
        if (r == c) CHECK(determinant(a) == Rational(bdet));
    }
}

TEST_CASE("kernel, inverse and solve") {
    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 2 + t % 5;
        QMatrix a = random_matrix(rng, n, n + 1, -3, 3, 2);
        for (const auto& v : kernel_basis(a)) CHECK(is_zero(a * v));
        QMatrix s = random_matrix(rng, n, n, -5, 5);
        if (!determinant(s).is_zero()) {
            CHECK(s * inverse(s) == QMatrix::identity(n));
            QVector b = s.column(0);
            QVector x;
            REQUIRE(solve(s, b, x));
            CHECK(s * x == b);
        }
    }
    QMatrix z(2, 2);
    z(0, 0) = 1;
    QVector x;
    CHECK_FALSE(solve(z, QVector{0, 1}, x));
    CHECK_THROWS_AS(inverse(z), std::domain_error);
}

TEST_CASE("span_basis") {
    std::vector<QVector> v{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(span_basis(v, 3).size() == 2);
    CHECK(span_basis({}, 3).empty());
}

TEST_CASE("rational roots with multiplicity") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4), mult(1, 3);
    for (int t = 0; t < 40; ++t) {
        std::map<Rational, int> want;
        QPoly p{Rational(t % 5 == 0 ? 3 : 1)};
        for (int k = 0; k < 1 + t % 4; ++k) {
            Rational r(num(rng), den(rng));
            int m = mult(rng);
            want[r] += m;
            for (int i = 0; i < m; ++i) p = mul(p, linear(r));
        }
        bool irreducible = t % 3 == 0;
        if (irreducible) p = mul(p, QPoly{Rational(-2), 0, 1});
        RationalRoots rr = rational_roots(p);
        CHECK(rr.roots == want);
        CHECK(rr.complete == !irreducible);
    }
    CHECK(rational_roots(QPoly{1, 0, 1}).roots.empty());
}

TEST_CASE("polynomial arithmetic") {
    QPoly a = mul(linear(1), linear(2)), q, r;
    divmod(a, linear(1), q, r);
    CHECK(q == linear(2));
    CHECK(degree(r) == -1);
    CHECK(eval(a, Rational(3)) == Rational(2));
    CHECK(derivative(a) == QPoly{-3, 2});
    CHECK(monic_gcd(a, mul(linear(2), linear(5))) == linear(2));
}
