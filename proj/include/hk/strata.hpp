#pragma once

#include "hk/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hk {

// One stratum S_(P,O). lambda and redim refer to the reduced centralizer of the class.
struct Stratum {
    std::string p_class;
    std::string orbit;
    long codim = 0;
    Rational trace_t;
    std::optional<Rational> mu_bound;  // nullopt when nilpotent data is missing
    bool conic = true;
    bool distinguished = false;
    bool integer_roots_assumed = true;
    long lambda = 0;
    long redim = 0;
};

// Reduced centralizer data of one class: d_s = redim, r_s = rank.
struct SubpairDescriptor {
    std::string p_class;
    RootMask mask = 0;
    long reduced_dim = 0;
    long rank_s = 0;
    long dim_s = 0;
    QVector witness;  // generic point coordinates on the torus
};

// Classes with their reduced centralizer data, in classification order.
struct ClassSummary {
    std::string label;
    RootMask mask = 0;
    bool saturated = true;
    std::string saturation_label;
    long redim = 0;
    long rank = 0;
    // Minimum of lambda over distinguished orbits, if known.
    std::optional<long> lambda_min;
};

struct StrataResult {
    std::vector<Stratum> strata;            // sorted by (codim, p_class, orbit)
    std::vector<ClassSummary> classes;      // saturated classes only
    std::vector<std::string> replaced;      // non-saturated classes and their saturations
};

SubpairDescriptor centralizer_of_class(const ChevalleyAlgebra& alg, const RootData& rd, const ClassInfo& c);

StrataResult enumerate_strata_diagonal(const ChevalleyAlgebra& alg, Exec exec = Exec::Parallel);

// min over classes P' conjugate into P of (lambda_min(P') - redim(P'))/2; nullopt if a needed
// lambda_min is unknown.
std::optional<Rational> mu_invariant(const RootData& rd, const std::vector<ClassSummary>& classes, RootMask p);

// (1+u)/(1-u), u = min over classes with d_s > 0 of r_s/d_s.
Rational delta_of_algebra(const std::vector<ClassSummary>& classes);
Rational delta_of_algebra(const ChevalleyAlgebra& alg);

// Sorting used for every stratum list.
void sort_strata(std::vector<Stratum>& s);

}  // namespace hk
