#include "hk/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hk {

Rational WeightVector::trace() const {
    Rational s;
    for (const auto& w : weights) s += w;
    return s;
}

WeightVector WeightVector::integers(const std::vector<long>& w, std::size_t base_count) {
    WeightVector out;
    out.base_count = base_count;
    for (long x : w) out.weights.emplace_back(x);
    return out;
}

NormalizedWeights normalize(const WeightVector& w) {
    if (w.weights.empty()) return {{}, Rational(1)};
    mpz_class g = 0, l = 1;
    for (const auto& x : w.weights) {
        if (x.sign() <= 0) throw std::invalid_argument("fiber weights must be positive");
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    }
    NormalizedWeights out;
    out.scale = Rational(g, l);
    for (const auto& x : w.weights) out.integer_weights.push_back((x / out.scale).to_long());
    return out;
}

WeylElement::WeylElement(std::size_t dim, std::size_t base) : dim_(dim), base_(base) {
    if (base > dim) throw std::invalid_argument("base count exceeds dimension");
}

WeylElement WeylElement::constant(std::size_t dim, const Rational& c, std::size_t base) {
    WeylElement e(dim, base);
    e.add_term(Exponents(2 * dim, 0), c);
    return e;
}

WeylElement WeylElement::monomial(const Exponents& ex, const Rational& c, std::size_t base) {
    if (ex.size() % 2) throw std::invalid_argument("exponent vector must have even length");
    WeylElement e(ex.size() / 2, base);
    e.add_term(ex, c);
    return e;
}

WeylElement WeylElement::position(std::size_t dim, std::size_t i, std::size_t base) {
    Exponents ex(2 * dim, 0);
    ex.at(i) = 1;
    return monomial(ex, 1, base);
}

WeylElement WeylElement::derivation(std::size_t dim, std::size_t i, std::size_t base) {
    Exponents ex(2 * dim, 0);
    ex.at(dim + i) = 1;
    return monomial(ex, 1, base);
}

Rational WeylElement::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void WeylElement::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != 2 * dim_) throw std::invalid_argument("exponent length does not match dimension");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch in sum");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch in difference");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

WeylElement WeylElement::operator-() const { return scaled(Rational(-1)); }

WeylElement WeylElement::scaled(const Rational& s) const {
    WeylElement out(dim_, base_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
}

namespace {

// D^b x^c = sum_k C(b,k) c!/(c-k)! x^(c-k) D^(b-k), coordinate by coordinate.
void multiply_monomials(const Exponents& l, const Exponents& r, const Rational& coeff,
                        std::size_t dim, WeylElement::Terms& out) {
    Exponents res(2 * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        res[i] = l[i] + r[i];
        res[dim + i] = l[dim + i] + r[dim + i];
    }
    std::vector<std::uint32_t> k(dim, 0);
    auto recurse = [&](auto&& self, std::size_t i, const mpz_class& c) -> void {
        if (i == dim) {
            Exponents e = res;
            for (std::size_t j = 0; j < dim; ++j) {
                e[j] -= k[j];
                e[dim + j] -= k[j];
            }
            Rational add = coeff * Rational(c);
            auto [it, inserted] = out.emplace(e, add);
            if (!inserted) {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
            return;
        }
        std::uint32_t b = l[dim + i], cc = r[i];
        std::uint32_t top = std::min(b, cc);
        mpz_class f = 1;  // C(b,j) * cc!/(cc-j)!
        for (std::uint32_t j = 0; j <= top; ++j) {
            if (j > 0) {
                f *= (b - j + 1);
                f /= j;
                f *= (cc - j + 1);
            }
            k[i] = j;
            self(self, i + 1, c * f);
        }
        k[i] = 0;
    };
    recurse(recurse, 0, mpz_class(1));
}

}  // namespace

WeylElement multiply(const WeylElement& p, const WeylElement& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("dimension mismatch in product");
    WeylElement::Terms out;
    for (const auto& [a, ca] : p.terms())
        for (const auto& [b, cb] : q.terms()) multiply_monomials(a, b, ca * cb, p.dim(), out);
    WeylElement r(p.dim(), p.base());
    for (const auto& [e, c] : out) r.add_term(e, c);
    return r;
}

WeylElement commutator(const WeylElement& p, const WeylElement& q) {
    return multiply(p, q) - multiply(q, p);
}

WeylElement power(const WeylElement& p, unsigned k) {
    WeylElement r = WeylElement::constant(p.dim(), 1, p.base());
    for (unsigned i = 0; i < k; ++i) r = multiply(r, p);
    return r;
}

WeylElement euler_field(const WeightVector& w) {
    std::size_t dim = w.dim();
    WeylElement e(dim, w.base_count);
    for (std::size_t j = 0; j < w.weights.size(); ++j) {
        Exponents ex(2 * dim, 0);
        ex[w.base_count + j] = 1;
        ex[dim + w.base_count + j] = 1;
        e.add_term(ex, w.weights[j]);
    }
    return e;
}

WeylElement multiply_euler(const WeylElement& p, const WeightVector& w, const Rational& c) {
    const std::size_t dim = p.dim();
    if (w.dim() != dim) throw std::invalid_argument("weight vector does not match dimension");
    WeylElement::Terms out;
    for (const auto& [e, coef] : p.terms()) {
        if (!c.is_zero()) out[e] += coef * c;
        for (std::size_t j = 0; j < w.weights.size(); ++j) {
            std::size_t i = w.base_count + j;
            // x^a D^b t D = x^(a+1) D^(b+1) + b x^a D^b
            Exponents up = e;
            ++up[i];
            ++up[dim + i];
            out[up] += coef * w.weights[j];
            if (e[dim + i]) out[e] += coef * w.weights[j] * Rational(static_cast<long>(e[dim + i]));
        }
    }
    WeylElement r(dim, p.base());
    for (const auto& [e, v] : out) r.add_term(e, v);
    return r;
}

std::optional<Rational> v_degree(const WeylElement& p, const WeightVector& w) {
    if (w.dim() != p.dim()) throw std::invalid_argument("weight vector does not match dimension");
    std::optional<Rational> best;
    std::size_t dim = p.dim();
    for (const auto& [e, c] : p.terms()) {
        Rational d;
        for (std::size_t j = 0; j < w.weights.size(); ++j) {
            std::size_t i = w.base_count + j;
            d += w.weights[j] * Rational(static_cast<long>(e[dim + i]) - static_cast<long>(e[i]));
        }
        if (!best || d > *best) best = d;
    }
    return best;
}

WeylElement fourier(const WeylElement& p) {
    std::size_t dim = p.dim();
    WeylElement::Terms out;
    for (const auto& [e, c] : p.terms()) {
        Exponents left(2 * dim, 0), right(2 * dim, 0);
        long parity = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            left[dim + i] = e[i];
            right[i] = e[dim + i];
            parity += e[dim + i];
        }
        multiply_monomials(left, right, parity % 2 ? -c : c, dim, out);
    }
    WeylElement r(dim, p.base());
    for (const auto& [e, c] : out) r.add_term(e, c);
    return r;
}

WeylElement sign_flip(const WeylElement& p) {
    WeylElement r(p.dim(), p.base());
    for (const auto& [e, c] : p.terms()) {
        long total = std::accumulate(e.begin(), e.end(), 0L);
        r.add_term(e, total % 2 ? -c : c);
    }
    return r;
}

WeylElement fiber_monomial(std::size_t dim, std::size_t base, const std::vector<std::uint32_t>& alpha) {
    if (base + alpha.size() != dim) throw std::invalid_argument("fiber multi-index length mismatch");
    Exponents ex(2 * dim, 0);
    for (std::size_t j = 0; j < alpha.size(); ++j) ex[base + j] = alpha[j];
    return WeylElement::monomial(ex, 1, base);
}

std::string WeylElement::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    auto total = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0L); };
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        long da = total(a->first), db = total(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const Exponents& e = t->first;
        Rational c = t->second;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        c = abs(c);
        std::vector<std::string> factors;
        auto name = [&](std::size_t i, bool deriv) {
            std::string n = deriv ? "D" : "";
            if (i < base_) return n + "x" + std::to_string(i + 1);
            return n + "t" + std::to_string(i - base_ + 1);
        };
        for (int part = 0; part < 2; ++part)
            for (std::size_t i = 0; i < dim_; ++i) {
                std::uint32_t k = e[part * dim_ + i];
                if (k == 0) continue;
                std::string f = name(i, part == 1);
                if (k > 1) f += "^" + std::to_string(k);
                factors.push_back(f);
            }
        if (factors.empty()) {
            os << c;
            continue;
        }
        if (c != Rational(1)) os << c << "*";
        for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    }
    return os.str();
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0, dim, base;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("operator parse error at offset " + std::to_string(pos) + ": " + why);
    }
    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    std::string digits() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected digits");
        return std::string(s.substr(start, pos - start));
    }
    WeylElement factor() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::string num = digits();
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                num += "/" + digits();
            }
            return WeylElement::constant(dim, Rational::parse(num), base);
        }
        bool deriv = false;
        if (s[pos] == 'D') {
            deriv = true;
            ++pos;
        }
        if (pos >= s.size() || (s[pos] != 'x' && s[pos] != 't')) fail("expected variable x<i>, t<i>, Dx<i> or Dt<i>");
        char kind = s[pos++];
        long idx = std::stol(digits());
        std::size_t coord;
        if (kind == 'x') {
            if (idx < 1 || static_cast<std::size_t>(idx) > base) fail("x index out of range");
            coord = static_cast<std::size_t>(idx - 1);
        } else {
            if (idx < 1 || static_cast<std::size_t>(idx) > dim - base) fail("t index out of range");
            coord = base + static_cast<std::size_t>(idx - 1);
        }
        unsigned k = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            k = static_cast<unsigned>(std::stoul(digits()));
        }
        Exponents ex(2 * dim, 0);
        ex[(deriv ? dim : 0) + coord] = k;
        return WeylElement::monomial(ex, 1, base);
    }
    WeylElement term() {
        WeylElement t = factor();
        while (peek('*')) {
            ++pos;
            t = multiply(t, factor());
        }
        return t;
    }
    WeylElement expr() {
        WeylElement acc(dim, base);
        bool neg = false;
        if (peek('-') || peek('+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        acc += neg ? -term() : term();
        for (;;) {
            skip();
            if (pos >= s.size()) break;
            if (s[pos] != '+' && s[pos] != '-') fail("expected '+' or '-'");
            neg = s[pos] == '-';
            ++pos;
            acc += neg ? -term() : term();
        }
        return acc;
    }
};

}  // namespace

WeylElement WeylElement::parse(std::string_view text, std::size_t dim, std::size_t base) {
    if (base > dim) throw std::invalid_argument("base count exceeds dimension");
    Parser p{text, 0, dim, base};
    p.skip();
    if (p.pos < text.size() && text.substr(p.pos) == "0") return WeylElement(dim, base);
    return p.expr();
}

std::size_t infer_base(std::string_view text, std::size_t dim) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'x') continue;
        std::size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i + 1) continue;
        best = std::max<std::size_t>(best, std::stoul(std::string(text.substr(i + 1, j - i - 1))));
    }
    return std::min(best, dim);
}

}  // namespace hk
