#include "hk/qpoly.hpp"

#include <stdexcept>

namespace hk {

void trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const QPoly& p) {
    QPoly t = p;
    trim(t);
    return static_cast<int>(t.size()) - 1;
}

Rational eval(const QPoly& p, const Rational& x) {
    Rational acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly derivative(const QPoly& p) {
    QPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<long>(k)));
    trim(d);
    return d;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    QPoly bb = b;
    trim(bb);
    if (bb.empty()) throw std::domain_error("polynomial division by zero");
    r = a;
    trim(r);
    q.assign(r.size() >= bb.size() ? r.size() - bb.size() + 1 : 0, Rational(0));
    while (r.size() >= bb.size()) {
        std::size_t shift = r.size() - bb.size();
        Rational f = r.back() / bb.back();
        q[shift] = f;
        for (std::size_t k = 0; k < bb.size(); ++k) r[shift + k] -= f * bb[k];
        trim(r);
    }
    trim(q);
}

QPoly monic_gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

namespace {

int sign_changes(const std::vector<QPoly>& seq, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& p : seq) {
        int s = eval(p, x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

void isolate(const std::vector<QPoly>& seq, const mpz_class& a, const mpz_class& b,
             std::vector<mpz_class>& found) {
    int count = sign_changes(seq, Rational(a)) - sign_changes(seq, Rational(b));
    if (count == 0) return;
    if (b - a == 1) {
        if (eval(seq[0], Rational(b)).is_zero()) found.push_back(b);
        return;
    }
    mpz_class mid;
    mpz_fdiv_q_2exp(mid.get_mpz_t(), mpz_class(a + b).get_mpz_t(), 1);
    isolate(seq, a, mid, found);
    isolate(seq, mid, b, found);
}

}  // namespace

RationalRoots rational_roots(const QPoly& input) {
    QPoly p = input;
    trim(p);
    if (p.empty()) throw std::domain_error("roots of the zero polynomial");
    RationalRoots out;
    int deg = static_cast<int>(p.size()) - 1;
    if (deg == 0) {
        out.complete = true;
        return out;
    }
    QPoly g = monic_gcd(p, derivative(p));
    QPoly sf, rem;
    divmod(p, g, sf, rem);

    // Integer primitive form, then y = L*x makes it monic over the integers.
    mpz_class den_lcm = 1;
    for (const auto& c : sf) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : sf) ic.push_back(c.num() * (den_lcm / c.den()));
    mpz_class content = 0;
    for (const auto& c : ic) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    for (auto& c : ic) c /= content;
    if (ic.back() < 0)
        for (auto& c : ic) c = -c;
    mpz_class lead = ic.back();
    std::size_t d = ic.size() - 1;
    QPoly monic(d + 1);
    mpz_class bound = 0;
    for (std::size_t k = 0; k <= d; ++k) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(d - k));
        mpz_class v = k == d ? mpz_class(1) : mpz_class(ic[k] * pw / lead);
        monic[k] = Rational(v);
        mpz_class av = abs(v);
        if (av > bound) bound = av;
    }
    bound += 1;

    std::vector<QPoly> seq{monic, derivative(monic)};
    while (degree(seq.back()) > 0) {
        QPoly q, r;
        divmod(seq[seq.size() - 2], seq.back(), q, r);
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        seq.push_back(r);
    }
    std::vector<mpz_class> ys;
    isolate(seq, -bound - 1, bound, ys);

    int total = 0;
    for (const auto& y : ys) {
        Rational r = Rational(y, lead);
        int mult = 0;
        QPoly cur = p;
        for (;;) {
            QPoly q, rr;
            divmod(cur, QPoly{-r, Rational(1)}, q, rr);
            if (!rr.empty()) break;
            ++mult;
            cur = std::move(q);
        }
        out.roots[r] = mult;
        total += mult;
    }
    out.complete = total == deg;
    return out;
}

}  // namespace hk
