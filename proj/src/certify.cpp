#include "hk/certify.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>

namespace hk {

using nlohmann::json;

namespace {

json rat(const Rational& r) { return r.to_string(); }

json opt_rat(const std::optional<Rational>& r) { return r ? rat(*r) : json(nullptr); }

json delta_json(const std::optional<Rational>& d) { return d ? rat(*d) : json("infinity"); }

json stratum_json(const Stratum& s) {
    return json{{"p_class", s.p_class},
                {"orbit", s.orbit},
                {"codim", s.codim},
                {"trace_t", rat(s.trace_t)},
                {"mu_bound", opt_rat(s.mu_bound)},
                {"conic", s.conic},
                {"distinguished", s.distinguished},
                {"integer_roots_assumed", s.integer_roots_assumed},
                {"lambda", s.lambda},
                {"redim", s.redim},
                {"verdict", to_json(stratum_verdict(s))},
                {"delta_sup", s.mu_bound ? delta_json(stratum_delta(s)) : json(nullptr)}};
}

json classes_json(const StrataResult& r) {
    json out = json::array();
    for (const auto& c : r.classes)
        out.push_back({{"label", c.label},
                       {"redim", c.redim},
                       {"rank", c.rank},
                       {"lambda_min", c.lambda_min ? json(*c.lambda_min) : json(nullptr)}});
    return out;
}

std::vector<std::string> base_assumptions(const StrataResult& r) {
    std::vector<std::string> a{
        "b-function roots enter only through mu_bound, a lower bound on the roots; verdicts test mu_bound > -trace_t/delta",
        "integer_roots_assumed: roots are taken to be integers, as for the b-functions produced by the binomial certificates",
        "the zero-stratum bound of each centralizer is applied to every nilpotent orbit of its class",
    };
    for (const auto& rep : r.replaced) a.push_back("non-saturated class replaced by its saturation: " + rep);
    return a;
}

struct Globals {
    json section;
    bool certified = false;
};

Globals global_section(const StrataResult& r, const NiceCheck& nice, std::optional<Rational> delta_formula) {
    bool complete = true, all_tame = true, all_conic = true, lambda_positive = true;
    std::optional<Rational> delta_sup;
    for (const auto& s : r.strata) {
        if (!s.mu_bound) {
            complete = false;
            continue;
        }
        TameVerdictInput v{{*s.mu_bound}, s.trace_t, s.codim, s.conic, false};
        all_tame = all_tame && delta_tame_along(v, Rational(1));
        all_conic = all_conic && s.conic;
        lambda_positive = lambda_positive && (s.redim == 0 || s.lambda > 0);
        auto d = stratum_delta(s);
        if (d && (!delta_sup || *d < *delta_sup)) delta_sup = d;
    }
    bool weakly = nice.nice == true;
    bool tame = weakly && complete && all_tame;
    bool conic_tame = tame && all_conic && lambda_positive;

    json verdicts = json::array();
    if (conic_tame) verdicts.push_back(to_json({VerdictKind::ConicTame, std::nullopt}));
    if (tame) verdicts.push_back(to_json({VerdictKind::Tame, std::nullopt}));
    if (weakly && complete && delta_sup) verdicts.push_back(to_json({VerdictKind::DeltaTame, delta_sup}));
    if (weakly) verdicts.push_back(to_json({VerdictKind::WeaklyTame, std::nullopt}));
    bool certified = !verdicts.empty();
    if (!certified) verdicts.push_back(to_json({VerdictKind::NotCertified, std::nullopt}));

    json violations = json::array();
    for (const auto& [label, lambda] : nice.violations) violations.push_back({{"class", label}, {"lambda", lambda}});
    json g{{"tame", tame},
           {"conic_tame", conic_tame},
           {"weakly_tame", weakly},
           {"complete", complete},
           {"delta_sup", complete ? delta_json(delta_sup) : json(nullptr)},
           {"delta_formula", opt_rat(delta_formula)},
           {"nice_pair", nice.nice ? json(*nice.nice) : json(nullptr)},
           {"nice_violations", violations},
           {"nice_missing", nice.missing},
           {"verdicts", verdicts}};
    return {g, certified};
}

json implications(const json& global) {
    json out = json::array();
    if (global["conic_tame"].get<bool>()) {
        out.push_back("conic-tame: multivalued holomorphic solutions with polynomial growth along the singular support "
                      "extend uniquely as L2_loc solutions");
        out.push_back("conic-tame with real singular support: distribution solutions on the real form are L1_loc functions");
    }
    if (global["delta_sup"].is_string() && global["delta_sup"] != "infinity") {
        std::string d = global["delta_sup"].get<std::string>();
        out.push_back("conic-delta-tame for every delta < " + d +
                      ": solutions with polynomial growth extend as L^(2 delta)_loc solutions");
        out.push_back("conic-delta-tame for every delta < " + d +
                      ": distribution solutions are a part supported on the singular support plus an L^delta_loc "
                      "function, and the supported part vanishes when delta > 1");
    }
    out.push_back("these statements are cited consequences of the verdicts and are not computed");
    return out;
}

std::optional<long> full_class_lambda(const RootData& rd, const StrataResult& r) {
    for (const auto& c : r.classes)
        if (c.mask == rd.all_mask()) return c.lambda_min;
    return std::nullopt;
}

json provenance(const json& input) {
    return json{{"input_hash", "sha256:" + sha256_hex(input.dump())}, {"tool_version", kToolVersion}};
}

}  // namespace

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::ConicTame: return "ConicTame";
        case VerdictKind::Tame: return "Tame";
        case VerdictKind::DeltaTame: return "DeltaTame";
        case VerdictKind::WeaklyTame: return "WeaklyTame";
        case VerdictKind::NotCertified: return "NotCertified";
    }
    return "NotCertified";
}

json to_json(const Verdict& v) {
    json j{{"kind", to_string(v.kind)}};
    if (v.kind == VerdictKind::DeltaTame) {
        j["delta"] = rat(*v.delta);
        j["bound"] = "exclusive";
    }
    return j;
}

std::optional<Rational> stratum_delta(const Stratum& s) {
    if (!s.mu_bound || s.mu_bound->sign() >= 0) return std::nullopt;
    return -s.trace_t / *s.mu_bound;
}

Verdict stratum_verdict(const Stratum& s) {
    if (!s.mu_bound) return {};
    TameVerdictInput v{{*s.mu_bound}, s.trace_t, s.codim, s.conic, false};
    if (delta_tame_along(v, Rational(1))) {
        if (s.conic && (s.redim == 0 || s.lambda > 0)) return {VerdictKind::ConicTame, std::nullopt};
        return {VerdictKind::Tame, std::nullopt};
    }
    auto d = stratum_delta(s);
    if (d && d->sign() > 0) return {VerdictKind::DeltaTame, d};
    if (weak_tame_along(v)) return {VerdictKind::WeaklyTame, std::nullopt};
    return {};
}

json zero_stratum_section(long n, std::optional<long> lambda) {
    json z{{"dim", n}, {"trace", n}, {"lambda", lambda ? json(*lambda) : json(nullptr)}};
    if (!lambda) {
        for (const char* k : {"mu_direct", "fourier_bound", "mapped", "agree", "tame_at_zero", "weyl_check"}) z[k] = nullptr;
        return z;
    }
    Rational mu_direct(*lambda - n, 2);
    Rational fourier_bound(-(*lambda + n), 2);
    Rational mapped = -fourier_bound - Rational(n);
    auto dim = static_cast<std::size_t>(n);
    WeylElement theta = euler_field(WeightVector::integers(std::vector<long>(dim, 1)));
    WeylElement lhs = fourier(theta - WeylElement::constant(dim, mu_direct));
    WeylElement rhs = -(theta + WeylElement::constant(dim, Rational(n) + mu_direct));
    z["mu_direct"] = rat(mu_direct);
    z["fourier_bound"] = rat(fourier_bound);
    z["mapped"] = rat(mapped);
    z["agree"] = mapped == mu_direct;
    z["tame_at_zero"] = mu_direct > Rational(-n);
    z["weyl_check"] = lhs == rhs;
    return z;
}

ZeroStratumBound hk_zero_stratum_bound(const ChevalleyAlgebra& alg) {
    Element e(alg.dim);
    for (int i = 0; i < alg.rs.rank; ++i) e[alg.basis_of_root(i)] = Rational(1);
    long lambda = static_cast<long>(kernel_basis(alg.ad(e)).size());
    long n = static_cast<long>(alg.dim);
    ZeroStratumBound b;
    b.mu = Rational(lambda - n, 2);
    b.tame_at_zero = b.mu > Rational(-n);
    return b;
}

CertificateReport certify_diagonal(const ChevalleyAlgebra& alg, const std::string& subject, Exec exec) {
    StrataResult r = enumerate_strata_diagonal(alg, exec);
    RootData rd = root_data(alg.rs);
    NiceCheck nice = nice_pair_check(r.classes);
    auto g = global_section(r, nice, delta_of_algebra(r.classes));

    json strata = json::array();
    for (const auto& s : r.strata) strata.push_back(stratum_json(s));
    auto assumptions = base_assumptions(r);
    assumptions.insert(assumptions.begin(),
                       "conic: strata of the diagonal case are conic for the Euler fields of their local product "
                       "structure, since the b-functions are monodromic");
    json input{{"algebra", alg.rs.cartan}};
    json report{{"schema", kSchemaVersion},
                {"subject",
                 {{"kind", "diagonal"},
                  {"name", subject.empty() ? json(nullptr) : json(subject)},
                  {"cartan", alg.rs.cartan},
                  {"dim", alg.dim},
                  {"rank", alg.rs.rank}}},
                {"classes", classes_json(r)},
                {"strata", strata},
                {"global", g.section},
                {"zero_stratum", zero_stratum_section(static_cast<long>(alg.dim), full_class_lambda(rd, r))},
                {"assumptions", assumptions},
                {"implications", implications(g.section)},
                {"provenance", provenance(input)}};
    return {report, g.certified};
}

CertificateReport certify_pair(const SymmetricPairDescriptor& pair, const json& input, Exec exec) {
    PairStrata ps = enumerate_strata_pair(pair, exec);
    RestrictedRoots rr = restricted_roots(pair);
    std::optional<Rational> formula;
    if (pair.diagonal()) formula = delta_of_algebra(ps.result.classes);
    auto g = global_section(ps.result, ps.nice, formula);

    json strata = json::array();
    for (const auto& s : ps.result.strata) strata.push_back(stratum_json(s));
    auto assumptions = base_assumptions(ps.result);
    assumptions.insert(assumptions.begin(),
                       "conic: the ideal of a symmetric pair is generated by homogeneous invariants, so strata are "
                       "treated as conic for the Euler fields of the stratification");
    if (!pair.diagonal()) {
        assumptions.push_back("nilpotent weight data is taken from the descriptor as supplied");
        assumptions.push_back("a class without a supplied orbit \"0\" receives the zero orbit with weights 0 repeated redim times");
    }
    json roots = json::array();
    for (std::size_t i = 0; i < rr.rd.num_positive; ++i)
        roots.push_back({{"root", rr.rd.roots[i]}, {"multiplicity", rr.rd.multiplicity[i]}});
    long dim_p = static_cast<long>(rank(QMatrix::identity(pair.algebra.dim) - pair.sigma));
    json report{{"schema", kSchemaVersion},
                {"subject",
                 {{"kind", "pair"},
                  {"type", pair.type},
                  {"cartan", pair.cartan},
                  {"dim", pair.algebra.dim},
                  {"dim_p", dim_p},
                  {"dim_a", rr.dim_a},
                  {"dim_m", rr.dim_m},
                  {"restricted_rank", rr.rd.rank},
                  {"restricted_roots", roots}}},
                {"classes", classes_json(ps.result)},
                {"strata", strata},
                {"global", g.section},
                {"zero_stratum", zero_stratum_section(dim_p, full_class_lambda(rr.rd, ps.result))},
                {"assumptions", assumptions},
                {"implications", implications(g.section)},
                {"provenance", provenance(input)}};
    return {report, g.certified};
}

long BnSummary::failures() const {
    return std::count_if(cases.begin(), cases.end(), [](const BnCase& c) { return !c.ok(); });
}

json BnSummary::to_json() const {
    json failed = json::array();
    long root_violations = 0, monotone_violations = 0;
    int max_degree = 0;
    for (const auto& c : cases) {
        root_violations += !c.roots_ok;
        monotone_violations += !c.monotone_ok;
        max_degree = std::max(max_degree, c.degree);
        if (!c.ok())
            failed.push_back({{"weights", c.weights}, {"N", c.N}, {"error", c.error.empty() ? "check failed" : c.error}});
    }
    return json{{"bounds", {{"max_d", max_d}, {"max_weight", max_weight}, {"max_n", max_N}}},
                {"cases", cases.size()},
                {"failures", failed},
                {"root_bound_violations", root_violations},
                {"monotonicity_violations", monotone_violations},
                {"max_degree", max_degree},
                {"verified", failed.empty()}};
}

BnCase verify_bn_case(const std::vector<long>& w, int N) {
    BnCase c;
    c.weights = w;
    c.N = N;
    try {
        WeightVector wv = WeightVector::integers(w);
        BPoly b = b_n_poly(wv, N);
        c.degree = b.degree();
        MembershipCertificate cert = certify_membership(wv, N);
        WeylElement expanded = cert.expand();
        c.terms = static_cast<long>(expanded.terms().size());
        c.expansion_ok = expanded == b.evaluate(euler_field(wv));
        c.roots_ok = true;
        for (const auto& [root, mult] : b.roots) c.roots_ok = c.roots_ok && root.is_integer() && root <= -wv.trace();
        c.monotone_ok = b_n_poly(wv, N + 1).contains(b);
    } catch (const std::exception& e) {
        c.error = e.what();
    }
    return c;
}

BnSummary verify_bn_suite(int max_d, int max_weight, int max_N, Exec exec) {
    BnSummary s;
    s.max_d = max_d;
    s.max_weight = max_weight;
    s.max_N = max_N;
    std::vector<std::pair<std::vector<long>, int>> jobs;
    for (int d = 1; d <= max_d; ++d) {
        std::vector<long> w(d, 1);
        while (true) {
            for (int N = 1; N <= max_N; ++N) jobs.emplace_back(w, N);
            int k = d - 1;
            while (k >= 0 && w[k] == max_weight) w[k--] = 1;
            if (k < 0) break;
            ++w[k];
        }
    }
    s.cases.resize(jobs.size());
    const long n = static_cast<long>(jobs.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = n - 1; i >= 0; --i) s.cases[i] = verify_bn_case(jobs[i].first, jobs[i].second);
    } else {
        for (long i = 0; i < n; ++i) s.cases[i] = verify_bn_case(jobs[i].first, jobs[i].second);
    }
    return s;
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::string out;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        out += buf;
    }
    return out;
}

}  // namespace hk
