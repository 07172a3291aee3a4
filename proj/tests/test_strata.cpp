#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hk/pair.hpp"

#include <bit>
#include <set>

using namespace hk;
using nlohmann::json;

namespace {

const std::vector<std::pair<std::string, std::size_t>> kClassCounts{
    {"A1", 2}, {"A2", 3}, {"A3", 5}, {"A4", 7}, {"B2", 5}, {"G2", 6},
    {"B3", 10}, {"C3", 10}, {"A1xA1", 4}, {"A1xA2", 6}};

// Closed and symmetric, checked on root coordinates.
bool closed_symmetric(const RootSystem& rs, const std::vector<int>& roots) {
    std::set<Root> s;
    for (int r : roots) s.insert(rs.roots[r]);
    for (const auto& a : s) {
        Root neg(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
        if (!s.count(neg)) return false;
        for (const auto& b : s) {
            Root sum(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
            if (rs.find(sum) >= 0 && !s.count(sum)) return false;
        }
    }
    return true;
}

std::vector<int> bits(RootMask m) {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if (m >> i & 1) out.push_back(i);
    return out;
}

json sl2_so2(json nilpotent = json::object()) {
    return json{{"type", "sl2/so2"},
                {"cartan", {{2}}},
                {"involution", {{"basis_images", {{"0", "0", "-1"}, {"0", "-1", "0"}, {"-1", "0", "0"}}}}},
                {"cartan_subspace", {{"0", "1", "0"}}},
                {"nilpotent_data", nilpotent}};
}

void check_same_strata(const StrataResult& a, const StrataResult& b) {
    REQUIRE(a.strata.size() == b.strata.size());
    for (std::size_t i = 0; i < a.strata.size(); ++i) {
        const Stratum &x = a.strata[i], &y = b.strata[i];
        CHECK(x.p_class == y.p_class);
        CHECK(x.orbit == y.orbit);
        CHECK(x.codim == y.codim);
        CHECK(x.trace_t == y.trace_t);
        CHECK(x.mu_bound == y.mu_bound);
        CHECK(x.lambda == y.lambda);
        CHECK(x.redim == y.redim);
        CHECK(x.distinguished == y.distinguished);
    }
}

}  // namespace

TEST_CASE("closed symmetric subsets up to W") {
    for (const auto& [type, count] : kClassCounts) {
        RootSystem rs = build_root_system(cartan_matrix(type));
        RootData rd = root_data(rs);
        auto serial = closed_symmetric_subsets(rd, Exec::Serial);
        CHECK(serial == closed_symmetric_subsets(rd, Exec::Parallel));
        CHECK(serial.size() == count);
        for (RootMask m : serial) {
            CHECK(closed_symmetric(rs, bits(m)));
            CHECK(canonical_mask(rd, m) == m);
            CHECK(canonical_mask(rd, canonical_mask(rd, m)) == m);
        }
    }
}

TEST_CASE("orbits of canonical masks cover every closed symmetric subset") {
    for (const char* type : {"A2", "B2", "G2", "A3"}) {
        RootSystem rs = build_root_system(cartan_matrix(type));
        RootData rd = root_data(rs);
        std::size_t m = rs.num_positive, brute = 0;
        for (RootMask pm = 0; pm < (RootMask(1) << m); ++pm)
            brute += closed_symmetric(rs, bits(pm | (pm << m)));
        std::set<RootMask> covered;
        for (RootMask c : closed_symmetric_subsets(rd))
            for (std::size_t w = 0; w < rd.weyl.size(); ++w) covered.insert(rd.apply(w, c));
        CHECK(covered.size() == brute);
    }
}

TEST_CASE("class labels and saturation") {
    RootData b2 = root_data(build_root_system(cartan_matrix("B2")));
    auto classes = classify(b2);
    std::size_t unsaturated = 0;
    for (const auto& c : classes) {
        if (!c.saturated) {
            ++unsaturated;
            CHECK_THROWS_AS(generic_point(b2, c.mask), NotSaturatedError);
        } else {
            QVector p = generic_point(b2, c.mask);
            for (std::size_t r = 0; r < b2.roots.size(); ++r) {
                Rational v;
                for (std::size_t i = 0; i < p.size(); ++i) v += b2.functionals[r][i] * p[i];
                CHECK(v.is_zero() == bool(c.mask >> r & 1));
            }
        }
    }
    CHECK(unsaturated == 1);
    std::set<std::string> labels;
    for (const auto& c : classes) labels.insert(c.label);
    CHECK(labels.size() == classes.size());
    CHECK(classify(root_data(build_root_system(cartan_matrix("A2")))).front().label == "0");
    CHECK_THROWS_AS(closed_symmetric_subsets(root_data(build_root_system(cartan_matrix("A5")))), UnsupportedError);
}

TEST_CASE("diagonal strata of sl_n") {
    std::vector<std::size_t> counts{3, 6, 14, 27};
    for (int n = 2; n <= 5; ++n) {
        ChevalleyAlgebra alg = chevalley("A" + std::to_string(n - 1));
        StrataResult r = enumerate_strata_diagonal(alg, Exec::Serial);
        CHECK(r.strata.size() == counts[n - 2]);
        StrataResult p = enumerate_strata_diagonal(alg, Exec::Parallel);
        check_same_strata(r, p);
        for (const auto& s : r.strata) {
            if (s.codim > 0) CHECK(s.trace_t > Rational(0));
            const ClassSummary* cls = nullptr;
            for (const auto& c : r.classes)
                if (c.label == s.p_class) cls = &c;
            REQUIRE(cls);
            Rational sum = *s.mu_bound + s.trace_t;
            if (s.codim > 0) {
                CHECK(sum >= Rational(cls->rank));
                CHECK(cls->rank >= 1);
                if (s.distinguished) CHECK(sum == Rational(cls->rank));
            }
        }
    }
    StrataResult sl2 = enumerate_strata_diagonal(chevalley("A1"));
    std::vector<long> codims;
    for (const auto& s : sl2.strata) codims.push_back(s.codim);
    CHECK(codims == std::vector<long>{0, 1, 3});
}

TEST_CASE("sl3 strata by explicit witnesses") {
    ChevalleyAlgebra alg = chevalley("A2");
    RootData rd = root_data(alg.rs);
    StrataResult r = enumerate_strata_diagonal(alg);
    std::map<std::pair<std::string, std::string>, long> codim;
    for (const auto& s : r.strata) codim[{s.p_class, s.orbit}] = s.codim;
    for (const auto& c : classify(rd)) {
        QVector pt = generic_point(rd, c.mask);
        Element x = cartan_element(alg, std::vector<Rational>(pt.begin(), pt.end()));
        for (const auto& o : type_a_orbits(c)) {
            Element y = x;
            for (std::size_t k = 0; k < c.components.size(); ++k)
                y = y + nilpotent_representative(alg, c.components[k].chain, o.parts[k]);
            long ker = static_cast<long>(kernel_basis(alg.ad(y)).size());
            CHECK(codim[{c.label, o.label}] == ker - (alg.rs.rank - c.rank));
        }
    }
}

TEST_CASE("codimension increases along closure chains") {
    for (int n = 2; n <= 5; ++n) {
        StrataResult r = enumerate_strata_diagonal(chevalley("A" + std::to_string(n - 1)));
        std::map<std::string, std::vector<const Stratum*>> by_class;
        for (const auto& s : r.strata) by_class[s.p_class].push_back(&s);
        RootData rd = root_data(chevalley("A" + std::to_string(n - 1)).rs);
        for (const auto& c : classify(rd)) {
            auto orbits = type_a_orbits(c);
            for (const auto& a : orbits)
                for (const auto& b : orbits) {
                    if (a.label == b.label) continue;
                    bool dom = true;
                    for (std::size_t k = 0; k < a.parts.size(); ++k) dom = dom && dominates(a.parts[k], b.parts[k]);
                    if (!dom) continue;
                    long ca = -1, cb = -1;
                    for (const Stratum* s : by_class[c.label]) {
                        if (s->orbit == a.label) ca = s->codim;
                        if (s->orbit == b.label) cb = s->codim;
                    }
                    CHECK(ca < cb);
                }
        }
    }
}

TEST_CASE("delta of sl_n two ways") {
    for (int n = 2; n <= 5; ++n) {
        ChevalleyAlgebra alg = chevalley("A" + std::to_string(n - 1));
        Rational want = Rational(1) + Rational(2, n);
        CHECK(delta_of_algebra(alg) == want);
        std::optional<Rational> best;
        for (const auto& s : enumerate_strata_diagonal(alg).strata)
            if (s.mu_bound->sign() < 0) {
                Rational d = -s.trace_t / *s.mu_bound;
                if (!best || d < *best) best = d;
            }
        CHECK(best == want);
    }
}

TEST_CASE("non type A orbit data is unsupported") {
    RootData rd = root_data(build_root_system(cartan_matrix("B2")));
    auto classes = classify(rd);
    CHECK_THROWS_AS(type_a_orbits(classes.back()), UnsupportedError);
    CHECK_THROWS_AS(enumerate_strata_diagonal(chevalley("B2")), UnsupportedError);
}

TEST_CASE("diagonal pair descriptors reproduce the diagonal strata") {
    for (const char* type : {"A1", "A2", "A3"}) {
        ChevalleyAlgebra alg = chevalley(type);
        SymmetricPairDescriptor pd = parse_descriptor(diagonal_descriptor_json(alg.rs.cartan));
        RestrictedRoots rr = restricted_roots(pd);
        CHECK(rr.rd.roots == alg.rs.roots);
        for (int m : rr.rd.multiplicity) CHECK(m == 2);
        CHECK(rr.dim_a == alg.rs.rank);
        CHECK(rr.dim_m == alg.rs.rank);
        PairStrata ps = enumerate_strata_pair(pd, Exec::Serial);
        check_same_strata(ps.result, enumerate_strata_diagonal(alg));
        CHECK(ps.nice.nice == true);
    }
}

TEST_CASE("the pair (sl2, so2)") {
    SymmetricPairDescriptor pd = parse_descriptor(sl2_so2());
    RestrictedRoots rr = restricted_roots(pd);
    CHECK(rr.dim_a == 1);
    CHECK(rr.dim_m == 0);
    REQUIRE(rr.rd.roots.size() == 2);
    CHECK(rr.rd.multiplicity == std::vector<int>{1, 1});
    long total = rr.dim_a + rr.dim_m;
    for (int m : rr.rd.multiplicity) total += m;
    CHECK(total == pd.algebra.dim);

    auto classes = classify(rr.rd);
    CHECK(subpair(pd, rr, classes.front()).sub.reduced_dim == 0);
    PairSubpair full = subpair(pd, rr, classes.back());
    CHECK(full.sub.reduced_dim == 2);
    CHECK(full.dim_centralizer == 3);

    PairStrata missing = enumerate_strata_pair(pd);
    CHECK_FALSE(missing.nice.nice.has_value());
    CHECK(missing.nice.missing == std::vector<std::string>{"A1"});

    PairStrata ok = enumerate_strata_pair(parse_descriptor(sl2_so2({{"A1/reg", {{"weights", {2}}, {"distinguished", true}}}})));
    CHECK(ok.nice.nice == true);
    for (const auto& s : ok.result.strata) CHECK(2 * s.trace_t - Rational(s.lambda) == Rational(s.redim));

    PairStrata bad = enumerate_strata_pair(parse_descriptor(sl2_so2({{"A1/x", {{"weights", {0}}, {"distinguished", true}}}})));
    CHECK(bad.nice.nice == false);
    REQUIRE(bad.nice.violations.size() == 1);
    CHECK(bad.nice.violations[0] == std::pair<std::string, long>{"A1", 0});
}

TEST_CASE("descriptor validation") {
    auto expect_error = [](json j) { CHECK_THROWS_AS(parse_descriptor(j), DescriptorError); };
    json j = sl2_so2();
    j["involution"]["basis_images"] = {{"1", "0", "0"}, {"0", "1", "0"}};
    expect_error(j);
    j = sl2_so2();
    j["involution"]["basis_images"] = {{"-1", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "-1"}};
    expect_error(j);
    j = sl2_so2();
    j["involution"]["basis_images"] = {{"0", "0", "-2"}, {"0", "-1", "0"}, {"-1/2", "0", "0"}};
    CHECK_NOTHROW(parse_descriptor(j));
    j = sl2_so2();
    j["cartan_subspace"] = {{"1", "0", "-1"}};
    expect_error(j);
    j = sl2_so2();
    j["extra"] = 1;
    expect_error(j);
    j = sl2_so2();
    j["cartan"] = {{2, -1}, {-1, 2}};
    expect_error(j);
    j = sl2_so2();
    j["cartan_subspace"] = {{"0", "x", "0"}};
    expect_error(j);
    expect_error(sl2_so2({{"A1", {{"weights", {2}}, {"distinguished", true}}}}));
    expect_error(sl2_so2({{"A1/reg", {{"weights", {-2}}, {"distinguished", true}}}}));
    CHECK_THROWS_AS(enumerate_strata_pair(parse_descriptor(sl2_so2({{"B7/reg", {{"weights", {2}}, {"distinguished", true}}}}))),
                    DescriptorError);

    json d = diagonal_descriptor_json(cartan_matrix("A2"));
    d["cartan_subspace"] = json::array({d["cartan_subspace"][0]});
    CHECK_THROWS_AS(restricted_roots(parse_descriptor(d)), DescriptorError);
    d = diagonal_descriptor_json(cartan_matrix("A1"));
    d["nilpotent_data"] = {{"A1/[2]", {{"weights", {2}}, {"distinguished", true}}}};
    expect_error(d);
    json s = sl2_so2();
    s["type"] = "diagonal";
    CHECK_THROWS_AS(enumerate_strata_pair(parse_descriptor(s)), DescriptorError);
}

TEST_CASE("nice check on constructed summaries") {
    std::vector<ClassSummary> cs{{"0", 0, true, "0", 0, 0, 0}, {"A1", 1, true, "A1", 2, 1, 1}};
    CHECK(nice_pair_check(cs).nice == true);
    cs[1].lambda_min = 0;
    CHECK(nice_pair_check(cs).nice == false);
    cs[1].lambda_min.reset();
    NiceCheck m = nice_pair_check(cs);
    CHECK_FALSE(m.nice.has_value());
    CHECK(m.missing == std::vector<std::string>{"A1"});
}
