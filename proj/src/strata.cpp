#include "hk/strata.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

namespace hk {

void sort_strata(std::vector<Stratum>& s) {
    std::sort(s.begin(), s.end(), [](const Stratum& a, const Stratum& b) {
        return std::tie(a.codim, a.p_class, a.orbit) < std::tie(b.codim, b.p_class, b.orbit);
    });
}

SubpairDescriptor centralizer_of_class(const ChevalleyAlgebra& alg, const RootData& rd, const ClassInfo& c) {
    SubpairDescriptor d;
    d.p_class = c.label;
    d.mask = c.mask;
    d.witness = generic_point(rd, c.mask);
    d.rank_s = c.rank;
    d.reduced_dim = c.size + c.rank;
    d.dim_s = d.reduced_dim;
    std::vector<Rational> coords(d.witness.begin(), d.witness.end());
    long centralizer = static_cast<long>(kernel_basis(alg.ad(cartan_element(alg, coords))).size());
    if (centralizer != alg.rs.rank + c.size)
        throw InternalError("centralizer of generic point has unexpected dimension for class " + c.label);
    return d;
}

StrataResult enumerate_strata_diagonal(const ChevalleyAlgebra& alg, Exec exec) {
    RootData rd = root_data(alg.rs);
    auto classes = classify(rd, exec);
    StrataResult res;
    for (const auto& c : classes) {
        if (!c.saturated) {
            RootMask sat = canonical_mask(rd, c.saturation);
            std::string target = "?";
            for (const auto& o : classes)
                if (o.mask == sat) target = o.label;
            res.replaced.push_back(c.label + " -> " + target);
            continue;
        }
        SubpairDescriptor sub = centralizer_of_class(alg, rd, c);
        ClassSummary summary{c.label, c.mask, true, c.label, sub.reduced_dim, sub.rank_s, std::nullopt};
        std::vector<Rational> coords(sub.witness.begin(), sub.witness.end());
        Element s = cartan_element(alg, coords);
        for (const auto& orbit : type_a_orbits(c)) {
            long lambda = 0;
            std::vector<int> weights;
            Element x = s;
            for (std::size_t k = 0; k < c.components.size(); ++k) {
                const Partition& p = orbit.parts[k];
                lambda += centralizer_dim_sln(p);
                auto w = adjoint_weights_sln(p);
                weights.insert(weights.end(), w.highest_weights.begin(), w.highest_weights.end());
                x = x + nilpotent_representative(alg, c.components[k].chain, p);
            }
            long from_weights = lambda_invariant(Sl2WeightDecomposition{weights}, sub.reduced_dim);
            long brute = static_cast<long>(kernel_basis(alg.ad(x)).size()) - (alg.rs.rank - c.rank);
            if (from_weights != lambda || brute != lambda)
                throw InternalError("orbit invariants disagree for " + c.label + "/" + orbit.label);
            Stratum st;
            st.p_class = c.label;
            st.orbit = orbit.label;
            st.codim = lambda;
            st.lambda = lambda;
            st.redim = sub.reduced_dim;
            st.trace_t = Rational(lambda + sub.reduced_dim, 2);
            st.mu_bound = Rational(sub.rank_s - sub.reduced_dim, 2);
            st.conic = true;
            st.distinguished = orbit.distinguished;
            if (orbit.distinguished && (!summary.lambda_min || lambda < *summary.lambda_min))
                summary.lambda_min = lambda;
            res.strata.push_back(st);
        }
        res.classes.push_back(summary);
    }
    sort_strata(res.strata);
    return res;
}

std::optional<Rational> mu_invariant(const RootData& rd, const std::vector<ClassSummary>& classes, RootMask p) {
    std::optional<Rational> best;
    for (const auto& c : classes) {
        if (!c.saturated || !conjugate_subset(rd, c.mask, p)) continue;
        Rational v;
        if (c.redim > 0) {
            if (!c.lambda_min) return std::nullopt;
            v = Rational(*c.lambda_min - c.redim, 2);
        }
        if (!best || v < *best) best = v;
    }
    return best;
}

Rational delta_of_algebra(const std::vector<ClassSummary>& classes) {
    std::optional<Rational> u;
    for (const auto& c : classes) {
        if (c.redim <= 0) continue;
        Rational r = Rational(c.rank, c.redim);
        if (!u || r < *u) u = r;
    }
    if (!u) throw std::invalid_argument("no class with positive reduced dimension");
    return (Rational(1) + *u) / (Rational(1) - *u);
}

Rational delta_of_algebra(const ChevalleyAlgebra& alg) {
    RootData rd = root_data(alg.rs);
    std::vector<ClassSummary> classes;
    for (const auto& c : classify(rd)) {
        if (!c.saturated) continue;
        classes.push_back({c.label, c.mask, true, c.label, c.size + c.rank, c.rank, std::nullopt});
    }
    return delta_of_algebra(classes);
}

}  // namespace hk
