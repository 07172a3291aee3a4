#pragma once

#include "hk/exec.hpp"
#include "hk/pair.hpp"
#include "hk/quasib.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hk {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class VerdictKind { ConicTame, Tame, DeltaTame, WeaklyTame, NotCertified };

struct Verdict {
    VerdictKind kind = VerdictKind::NotCertified;
    std::optional<Rational> delta;  // DeltaTame only: tame for every delta below this value
};

std::string to_string(VerdictKind k);
nlohmann::json to_json(const Verdict& v);

// Per-stratum verdict; roots enter only as the lower bound mu_bound.
Verdict stratum_verdict(const Stratum& s);

// -t/mu when mu < 0, nullopt (infinity) otherwise.
std::optional<Rational> stratum_delta(const Stratum& s);

struct CertificateReport {
    nlohmann::json json;   // keys sorted
    bool certified = false;
};

CertificateReport certify_diagonal(const ChevalleyAlgebra& alg, const std::string& subject = "",
                                   Exec exec = Exec::Parallel);
CertificateReport certify_pair(const SymmetricPairDescriptor& pair, const nlohmann::json& input,
                               Exec exec = Exec::Parallel);

struct ZeroStratumBound {
    Rational mu;
    bool tame_at_zero = false;
};

ZeroStratumBound hk_zero_stratum_bound(const ChevalleyAlgebra& alg);

// Zero-stratum section: n = dim p, lambda = lambda_min of the full class.
nlohmann::json zero_stratum_section(long n, std::optional<long> lambda);

struct BnCase {
    std::vector<long> weights;
    int N = 0;
    int degree = 0;
    long terms = 0;
    bool expansion_ok = false;
    bool roots_ok = false;
    bool monotone_ok = false;
    std::string error;

    bool ok() const { return expansion_ok && roots_ok && monotone_ok && error.empty(); }
};

struct BnSummary {
    int max_d = 0, max_weight = 0, max_N = 0;
    std::vector<BnCase> cases;  // deterministic order: d, weights lexicographic, N

    long failures() const;
    nlohmann::json to_json() const;
};

BnCase verify_bn_case(const std::vector<long>& w, int N);
BnSummary verify_bn_suite(int max_d, int max_weight, int max_N, Exec exec = Exec::Parallel);

std::string sha256_hex(const std::string& data);

}  // namespace hk
