#pragma once

#include "hk/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hk {

// Exponents: first dim entries are positions (alpha), next dim are derivations (beta).
using Exponents = std::vector<std::uint32_t>;

// Rational weights of the fiber coordinates; the first base_count coordinates carry weight 0.
struct WeightVector {
    std::vector<Rational> weights;
    std::size_t base_count = 0;

    std::size_t dim() const { return base_count + weights.size(); }
    Rational trace() const;
    static WeightVector integers(const std::vector<long>& w, std::size_t base_count = 0);
};

// n_i = scale * m_i with m_i coprime positive integers.
struct NormalizedWeights {
    std::vector<long> integer_weights;
    Rational scale;
};
NormalizedWeights normalize(const WeightVector& w);

// Polynomial differential operator in normal order. Coordinates 0..base-1 render as x1.., the rest
// as t1..; base only affects rendering and parsing.
class WeylElement {
public:
    using Terms = std::map<Exponents, Rational>;

    WeylElement() = default;
    explicit WeylElement(std::size_t dim, std::size_t base = 0);

    static WeylElement constant(std::size_t dim, const Rational& c, std::size_t base = 0);
    static WeylElement monomial(const Exponents& e, const Rational& c, std::size_t base = 0);
    static WeylElement position(std::size_t dim, std::size_t i, std::size_t base = 0);
    static WeylElement derivation(std::size_t dim, std::size_t i, std::size_t base = 0);

    std::size_t dim() const { return dim_; }
    std::size_t base() const { return base_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Rational& c);
    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o);
    WeylElement operator-() const;
    WeylElement scaled(const Rational& s) const;

    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;
    // Factors joined by '*' are multiplied in the Weyl algebra, left to right.
    static WeylElement parse(std::string_view text, std::size_t dim, std::size_t base = 0);

private:
    std::size_t dim_ = 0, base_ = 0;
    Terms terms_;
};

WeylElement multiply(const WeylElement& p, const WeylElement& q);
WeylElement commutator(const WeylElement& p, const WeylElement& q);
WeylElement power(const WeylElement& p, unsigned k);

// sum n_i t_i D_{t_i} over fiber coordinates.
WeylElement euler_field(const WeightVector& w);

// p * (euler_field(w) + c), without the general product.
WeylElement multiply_euler(const WeylElement& p, const WeightVector& w, const Rational& c);

// Weighted V-degree; nullopt stands for minus infinity (zero element).
std::optional<Rational> v_degree(const WeylElement& p, const WeightVector& w);

// x_i -> D_i, D_i -> -x_i.
WeylElement fourier(const WeylElement& p);

// x_i -> -x_i, D_i -> -D_i.
WeylElement sign_flip(const WeylElement& p);

// t^alpha on the fiber coordinates (alpha indexed over fibers only).
WeylElement fiber_monomial(std::size_t dim, std::size_t base, const std::vector<std::uint32_t>& alpha);

// Smallest base for which every x index in the text fits; text without x names gives 0.
std::size_t infer_base(std::string_view text, std::size_t dim);

}  // namespace hk
