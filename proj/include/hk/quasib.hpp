#pragma once

#include "hk/weyl.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hk {

// Monic polynomial given by its roots. scale is the normalization factor of the weights
// that produced it (1 for integer weights).
struct BPoly {
    std::map<Rational, int> roots;
    Rational scale = 1;

    int degree() const;
    std::vector<Rational> coefficients() const;  // low to high, monic
    WeylElement evaluate(const WeylElement& eta) const;  // product of (eta - r)
    bool contains(const BPoly& other) const;  // root multiset inclusion
};

struct MembershipCertificate {
    WeightVector weights;
    int N = 0;
    std::vector<std::pair<WeylElement, std::vector<std::uint32_t>>> decomposition;

    // sum coefficient * t^alpha
    WeylElement expand() const;
};

struct CertificateError : std::logic_error {
    using std::logic_error::logic_error;
};

struct TameVerdictInput {
    std::vector<Rational> roots;
    Rational trace;
    long codim = 0;
    bool conic = false;
    bool conormal_escape = false;
};

std::set<Rational> weight_sums(const WeightVector& w, int N);
BPoly b_n_poly(const WeightVector& w, int N);
MembershipCertificate certify_membership(const WeightVector& w, int N);
BPoly support_bpoly(const WeightVector& w, int M);

bool delta_tame_along(const TameVerdictInput& v, const Rational& delta);
bool weak_tame_along(const TameVerdictInput& v);

// All compositions of N into d nonnegative parts, lexicographically descending.
std::vector<std::vector<std::uint32_t>> multi_indices(std::size_t d, int N);

}  // namespace hk
