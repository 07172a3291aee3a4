#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hk/weyl.hpp"

#include <random>

using namespace hk;

namespace {

using Poly = std::map<std::vector<std::uint32_t>, Rational>;

// Action of an operator on polynomials: c x^a D^b f = c x^a (d^b f).
Poly act(const WeylElement& p, const Poly& f) {
    const std::size_t n = p.dim();
    Poly out;
    for (const auto& [e, c] : p.terms())
        for (const auto& [m, fc] : f) {
            std::vector<std::uint32_t> r(n);
            Rational coef = c * fc;
            bool zero = false;
            for (std::size_t i = 0; i < n && !zero; ++i) {
                std::uint32_t b = e[n + i];
                if (m[i] < b) {
                    zero = true;
                    break;
                }
                for (std::uint32_t k = 0; k < b; ++k) coef *= Rational(static_cast<long>(m[i] - k));
                r[i] = m[i] - b + e[i];
            }
            if (zero) continue;
            out[r] += coef;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

WeylElement random_element(std::mt19937& rng, std::size_t dim, std::size_t base, int terms, int maxexp) {
    std::uniform_int_distribution<int> ex(0, maxexp), num(-5, 5), den(1, 3);
    WeylElement p(dim, base);
    for (int t = 0; t < terms; ++t) {
        Exponents e(2 * dim);
        for (auto& x : e) x = ex(rng);
        p.add_term(e, Rational(num(rng), den(rng)));
    }
    return p;
}

Poly random_poly(std::mt19937& rng, std::size_t dim) {
    std::uniform_int_distribution<int> ex(0, 4), num(-4, 4);
    Poly f;
    for (int t = 0; t < 5; ++t) {
        std::vector<std::uint32_t> m(dim);
        for (auto& x : m) x = ex(rng);
        f[m] += Rational(num(rng));
    }
    std::erase_if(f, [](const auto& kv) { return kv.second.is_zero(); });
    return f;
}

WeylElement theta(std::size_t n) { return euler_field(WeightVector::integers(std::vector<long>(n, 1))); }

}  // namespace

TEST_CASE("normal ordering of simple products") {
    CHECK(WeylElement::parse("Dt1*t1", 1).to_string() == "t1*Dt1 + 1");
    WeylElement e = WeylElement::parse("t1*Dt1", 1);
    CHECK(power(e, 2).to_string() == "t1^2*Dt1^2 + t1*Dt1");
    CHECK(WeylElement::parse("Dx1*x1 - x1*Dx1", 1, 1).to_string() == "1");
    CHECK(WeylElement::parse("3*t1^2*Dt1 - 1/2*x1*Dt2", 3, 1).to_string() == "3*t1^2*Dt1 - 1/2*x1*Dt2");
    CHECK(WeylElement::parse("0", 2).is_zero());
    CHECK_THROWS_AS(WeylElement::parse("t3", 2), std::invalid_argument);
    CHECK_THROWS_AS(WeylElement::parse("t1 +", 2), std::invalid_argument);
}

TEST_CASE("render and parse round-trip") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        std::size_t dim = 1 + t % 3, base = t % (dim + 1);
        WeylElement p = random_element(rng, dim, base, 1 + t % 5, 3);
        CHECK(WeylElement::parse(p.to_string(), dim, base) == p);
    }
}

TEST_CASE("product agrees with the polynomial action") {
    std::mt19937 rng(21);
    for (int t = 0; t < 300; ++t) {
        std::size_t dim = 1 + t % 3;
        WeylElement p = random_element(rng, dim, 0, 3, 2), q = random_element(rng, dim, 0, 3, 2);
        Poly f = random_poly(rng, dim);
        CHECK(act(multiply(p, q), f) == act(p, act(q, f)));
    }
}

TEST_CASE("associativity") {
    std::mt19937 rng(31);
    for (int t = 0; t < 300; ++t) {
        std::size_t dim = 1 + t % 3;
        WeylElement a = random_element(rng, dim, 0, 3, 2), b = random_element(rng, dim, 0, 3, 2),
                    c = random_element(rng, dim, 0, 3, 2);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("grading identity [eta, m] = -v_degree(m) m") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> wt(1, 4), ex(0, 3);
    for (int t = 0; t < 300; ++t) {
        std::size_t base = t % 2, fib = 1 + t % 3, dim = base + fib;
        std::vector<long> w(fib);
        for (auto& x : w) x = wt(rng);
        WeightVector wv = WeightVector::integers(w, base);
        Exponents e(2 * dim);
        for (auto& x : e) x = ex(rng);
        WeylElement m = WeylElement::monomial(e, Rational(1), base);
        Rational deg = *v_degree(m, wv);
        CHECK(commutator(euler_field(wv), m) == m.scaled(-deg));
    }
    WeylElement t2 = WeylElement::position(2, 1);
    CHECK(commutator(euler_field(WeightVector::integers({1, 2})), t2).to_string() == "2*t2");
}

TEST_CASE("v_degree is subadditive") {
    std::mt19937 rng(51);
    std::uniform_int_distribution<int> wt(1, 3);
    for (int t = 0; t < 300; ++t) {
        std::size_t dim = 1 + t % 3;
        std::vector<long> w(dim);
        for (auto& x : w) x = wt(rng);
        WeightVector wv = WeightVector::integers(w);
        WeylElement p = random_element(rng, dim, 0, 3, 2), q = random_element(rng, dim, 0, 3, 2);
        auto vp = v_degree(p, wv), vq = v_degree(q, wv), vpq = v_degree(multiply(p, q), wv);
        if (!vp || !vq) continue;
        if (vpq) CHECK(*vpq <= *vp + *vq);
        auto vs = v_degree(p + q, wv);
        if (vs) CHECK(*vs <= std::max(*vp, *vq));
    }
    CHECK_FALSE(v_degree(WeylElement(2), WeightVector::integers({1, 1})).has_value());
}

TEST_CASE("Fourier transform") {
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(fourier(theta(n)) == -(theta(n) + WeylElement::constant(n, Rational(static_cast<long>(n)))));
    std::mt19937 rng(61);
    for (int t = 0; t < 1000; ++t) {
        std::size_t dim = 1 + t % 3;
        WeylElement p = random_element(rng, dim, 0, 2, 2), q = random_element(rng, dim, 0, 2, 2);
        CHECK(fourier(multiply(p, q)) == multiply(fourier(p), fourier(q)));
        CHECK(fourier(fourier(p)) == sign_flip(p));
    }
    CHECK(fourier(WeylElement::parse("x1*Dx1 + x2*Dx2", 2, 2)).to_string() == "-x1*Dx1 - x2*Dx2 - 2");
}

TEST_CASE("right multiplication by a shifted Euler field") {
    std::mt19937 rng(71);
    for (int t = 0; t < 100; ++t) {
        std::size_t base = t % 2, fib = 1 + t % 3, dim = base + fib;
        std::vector<long> w(fib);
        for (std::size_t i = 0; i < fib; ++i) w[i] = 1 + (t + i) % 3;
        WeightVector wv = WeightVector::integers(w, base);
        WeylElement p = random_element(rng, dim, base, 3, 2);
        Rational c(t % 7 - 3, 2);
        CHECK(multiply_euler(p, wv, c) == multiply(p, euler_field(wv) + WeylElement::constant(dim, c, base)));
    }
}

TEST_CASE("weights") {
    WeightVector w{{Rational(2, 3), Rational(4, 3)}, 1};
    CHECK(w.dim() == 3);
    CHECK(w.trace() == Rational(2));
    NormalizedWeights nw = normalize(w);
    CHECK(nw.integer_weights == std::vector<long>{1, 2});
    CHECK(nw.scale == Rational(2, 3));
    CHECK(infer_base("x2*Dt1", 3) == 2);
    CHECK(infer_base("t1", 3) == 0);
    CHECK(fiber_monomial(3, 1, {2, 1}).to_string() == "t1^2*t2");
}
