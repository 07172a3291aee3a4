#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hk/certify.hpp"

using namespace hk;
using nlohmann::json;

namespace {

json sl2_so2(json nilpotent) {
    return json{{"type", "sl2/so2"},
                {"cartan", {{2}}},
                {"involution", {{"basis_images", {{"0", "0", "-1"}, {"0", "-1", "0"}, {"-1", "0", "0"}}}}},
                {"cartan_subspace", {{"0", "1", "0"}}},
                {"nilpotent_data", nilpotent}};
}

CertificateReport pair_report(const json& j) { return certify_pair(parse_descriptor(j), j); }

void check_chain(const json& g) {
    if (g["conic_tame"].get<bool>()) CHECK(g["tame"].get<bool>());
    if (g["tame"].get<bool>()) CHECK(g["weakly_tame"].get<bool>());
    if (g["delta_sup"].is_string() && g["weakly_tame"].get<bool>()) {
        std::string d = g["delta_sup"];
        if (d == "infinity" || Rational::parse(d) > Rational(1)) CHECK(g["tame"].get<bool>());
    }
}

}  // namespace

TEST_CASE("diagonal reports of sl_n") {
    for (int n = 2; n <= 5; ++n) {
        ChevalleyAlgebra alg = chevalley("A" + std::to_string(n - 1));
        CertificateReport r = certify_diagonal(alg, "A" + std::to_string(n - 1));
        const json& g = r.json["global"];
        std::string want = (Rational(1) + Rational(2, n)).to_string();
        CHECK(r.certified);
        CHECK(g["conic_tame"] == true);
        CHECK(g["delta_sup"] == want);
        CHECK(g["delta_formula"] == want);
        CHECK(r.json["schema"] == 1);
        check_chain(g);
        CHECK(r.json["zero_stratum"]["agree"] == true);
        CHECK(r.json["zero_stratum"]["weyl_check"] == true);
        CHECK(r.json.dump() == certify_diagonal(alg, "A" + std::to_string(n - 1), Exec::Serial).json.dump());
    }
    json s = certify_diagonal(chevalley("A1"), "A1").json["strata"];
    std::vector<std::string> deltas;
    for (const auto& x : s) deltas.push_back(x["delta_sup"]);
    CHECK(deltas == std::vector<std::string>{"infinity", "2", "3"});
}

TEST_CASE("zero-stratum bound") {
    for (const char* type : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "G2", "D4", "F4", "A1xA2"}) {
        ChevalleyAlgebra alg = chevalley(type);
        ZeroStratumBound b = hk_zero_stratum_bound(alg);
        CHECK(b.mu == Rational(alg.rs.rank - alg.dim, 2));
        CHECK(b.tame_at_zero);
    }
    CHECK(hk_zero_stratum_bound(chevalley("A1")).mu == Rational(-1));
    CHECK(hk_zero_stratum_bound(chevalley("A2")).mu == Rational(-3));
}

TEST_CASE("zero-stratum section") {
    for (long n = 1; n <= 8; ++n)
        for (long lambda = 0; lambda <= n; ++lambda) {
            json z = zero_stratum_section(n, lambda);
            CHECK(z["agree"] == true);
            CHECK(z["weyl_check"] == true);
            CHECK(z["tame_at_zero"] == (lambda + n > 0));
        }
    CHECK(zero_stratum_section(3, std::nullopt)["mu_direct"].is_null());
}

TEST_CASE("pair path reproduces the diagonal report") {
    for (const char* type : {"A1", "A2"}) {
        ChevalleyAlgebra alg = chevalley(type);
        json d = diagonal_descriptor_json(alg.rs.cartan);
        CertificateReport a = certify_diagonal(alg, type), b = pair_report(d);
        for (const char* key : {"strata", "global", "zero_stratum", "classes"}) CHECK(a.json[key] == b.json[key]);
        CHECK(a.certified == b.certified);
    }
}

TEST_CASE("constructed pairs") {
    CertificateReport nonnice = pair_report(sl2_so2({{"A1/x", {{"weights", {0}}, {"distinguished", true}}}}));
    CHECK_FALSE(nonnice.certified);
    CHECK(nonnice.json["global"]["weakly_tame"] == false);
    CHECK(nonnice.json["global"]["nice_violations"] == json::array({{{"class", "A1"}, {"lambda", 0}}}));
    check_chain(nonnice.json["global"]);

    CertificateReport gap = pair_report(sl2_so2({{"A1/reg", {{"weights", {2}}, {"distinguished", true}}},
                                                 {"A1/sub", {{"weights", {0}}, {"distinguished", false}}}}));
    CHECK(gap.certified);
    CHECK(gap.json["global"]["weakly_tame"] == true);
    CHECK(gap.json["global"]["conic_tame"] == false);
    check_chain(gap.json["global"]);

    CertificateReport incomplete = pair_report(sl2_so2(json::object()));
    CHECK_FALSE(incomplete.certified);
    CHECK(incomplete.json["global"]["complete"] == false);
    CHECK(incomplete.json["global"]["delta_sup"].is_null());
    CHECK(incomplete.json["global"]["nice_missing"] == json::array({"A1"}));
    for (const auto& s : incomplete.json["strata"])
        if (s["p_class"] == "A1") CHECK(s["verdict"]["kind"] == "NotCertified");
}

TEST_CASE("stratum verdicts") {
    Stratum s;
    s.codim = 2;
    s.redim = 3;
    s.lambda = 1;
    s.trace_t = 3;
    s.mu_bound = Rational(-1);
    CHECK(stratum_verdict(s).kind == VerdictKind::ConicTame);
    s.lambda = 0;
    CHECK(stratum_verdict(s).kind == VerdictKind::Tame);
    s.mu_bound = Rational(-6);
    Verdict v = stratum_verdict(s);
    CHECK(v.kind == VerdictKind::DeltaTame);
    CHECK(v.delta == Rational(1, 2));
    CHECK(to_json(v) == json{{"kind", "DeltaTame"}, {"delta", "1/2"}, {"bound", "exclusive"}});
    s.mu_bound.reset();
    CHECK(stratum_verdict(s).kind == VerdictKind::NotCertified);
}

TEST_CASE("provenance hash") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    json p = certify_diagonal(chevalley("A1"), "A1").json["provenance"];
    CHECK(p["tool_version"] == kToolVersion);
    CHECK(p["input_hash"] == "sha256:" + sha256_hex(json{{"algebra", cartan_matrix("A1")}}.dump()));
}
