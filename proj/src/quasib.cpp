#include "hk/quasib.hpp"

#include "hk/qpoly.hpp"

namespace hk {

int BPoly::degree() const {
    int d = 0;
    for (const auto& [r, m] : roots) d += m;
    return d;
}

std::vector<Rational> BPoly::coefficients() const {
    QPoly p{Rational(1)};
    for (const auto& [r, m] : roots)
        for (int k = 0; k < m; ++k) p = mul(p, QPoly{-r, Rational(1)});
    return p;
}

WeylElement BPoly::evaluate(const WeylElement& eta) const {
    WeylElement acc = WeylElement::constant(eta.dim(), 1, eta.base());
    for (const auto& [r, m] : roots)
        for (int k = 0; k < m; ++k)
            acc = multiply(acc, eta - WeylElement::constant(eta.dim(), r, eta.base()));
    return acc;
}

bool BPoly::contains(const BPoly& other) const {
    for (const auto& [r, m] : other.roots) {
        auto it = roots.find(r);
        if (it == roots.end() || it->second < m) return false;
    }
    return true;
}

std::vector<std::vector<std::uint32_t>> multi_indices(std::size_t d, int N) {
    std::vector<std::vector<std::uint32_t>> out;
    if (d == 0) {
        if (N == 0) out.emplace_back();
        return out;
    }
    std::vector<std::uint32_t> cur(d, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == d) {
            cur[i] = static_cast<std::uint32_t>(left);
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[i] = static_cast<std::uint32_t>(k);
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, N);
    return out;
}

static Rational pairing(const std::vector<std::uint32_t>& alpha, const WeightVector& w) {
    Rational s;
    for (std::size_t i = 0; i < alpha.size(); ++i) s += w.weights[i] * Rational(static_cast<long>(alpha[i]));
    return s;
}

std::set<Rational> weight_sums(const WeightVector& w, int N) {
    if (N < 0) throw std::invalid_argument("N must be nonnegative");
    std::set<Rational> out;
    for (const auto& a : multi_indices(w.weights.size(), N)) out.insert(pairing(a, w));
    return out;
}

BPoly b_n_poly(const WeightVector& w, int N) {
    if (N < 1) throw std::invalid_argument("N must be at least 1");
    BPoly b;
    b.scale = normalize(w).scale;
    Rational tr = w.trace();
    for (int k = 0; k < N; ++k)
        for (const auto& a : weight_sums(w, k)) b.roots[-tr - a] += 1;
    return b;
}

MembershipCertificate certify_membership(const WeightVector& w, int N) {
    if (N < 1) throw std::invalid_argument("N must be at least 1");
    for (const auto& x : w.weights)
        if (!x.is_integer() || x.sign() <= 0)
            throw std::invalid_argument("certificate needs positive integer weights; normalize first");
    const std::size_t dim = w.dim(), base = w.base_count, d = w.weights.size();
    const WeylElement eta = euler_field(w);
    const Rational tr = w.trace();

    std::map<std::vector<std::uint32_t>, WeylElement> coeff;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<std::uint32_t> e(d, 0);
        e[i] = 1;
        coeff[e] = WeylElement::derivation(dim, base + i, base).scaled(w.weights[i]);
    }
    // t^alpha f(eta) = f(eta - <alpha,n>) t^alpha; the factor of b_{k+1}/b_k that becomes
    // eta + |n| = sum n_i D_i t_i is split off and absorbed into t^alpha.
    for (int k = 1; k < N; ++k) {
        std::set<Rational> ak = weight_sums(w, k);
        std::map<std::vector<std::uint32_t>, WeylElement> next;
        for (const auto& [alpha, c] : coeff) {
            Rational shift = pairing(alpha, w);
            WeylElement cur = c;
            for (const auto& a : ak) {
                if (a == shift) continue;
                cur = multiply_euler(cur, w, tr + a - shift);
            }
            for (std::size_t i = 0; i < d; ++i) {
                std::vector<std::uint32_t> beta = alpha;
                beta[i] += 1;
                WeylElement add = multiply(cur, WeylElement::derivation(dim, base + i, base).scaled(w.weights[i]));
                auto it = next.find(beta);
                if (it == next.end()) next.emplace(beta, std::move(add));
                else it->second += add;
            }
        }
        coeff = std::move(next);
    }

    MembershipCertificate cert{w, N, {}};
    for (auto& [alpha, c] : coeff)
        if (!c.is_zero()) cert.decomposition.emplace_back(std::move(c), alpha);
    if (cert.expand() != b_n_poly(w, N).evaluate(eta))
        throw CertificateError("membership certificate does not re-expand to b_N(eta)");
    return cert;
}

WeylElement MembershipCertificate::expand() const {
    const std::size_t dim = weights.dim(), base = weights.base_count;
    WeylElement acc(dim, base);
    for (const auto& [c, alpha] : decomposition) acc += multiply(c, fiber_monomial(dim, base, alpha));
    return acc;
}

BPoly support_bpoly(const WeightVector& w, int M) {
    if (M < 1) throw std::invalid_argument("annihilation exponent must be at least 1");
    int d = static_cast<int>(w.weights.size());
    return b_n_poly(w, (M - 1) * d + 1);
}

bool delta_tame_along(const TameVerdictInput& v, const Rational& delta) {
    if (delta.sign() <= 0) throw std::invalid_argument("delta must be positive");
    if (v.codim == 0) return true;
    Rational threshold = -v.trace / delta;
    for (const auto& r : v.roots)
        if (!(r > threshold)) return false;
    return true;
}

bool weak_tame_along(const TameVerdictInput& v) {
    return delta_tame_along(v, Rational(1)) || v.conormal_escape;
}

}  // namespace hk
