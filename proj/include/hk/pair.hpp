#pragma once

#include "hk/strata.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hk {

struct DescriptorError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NilpotentDatum {
    std::vector<long> weights;
    bool distinguished = false;
};

struct SymmetricPairDescriptor {
    std::string type;
    IntMatrix cartan;
    ChevalleyAlgebra algebra;
    QMatrix sigma;                          // column i is the image of basis vector i
    std::vector<Element> cartan_subspace;   // spanning set of a
    std::map<std::string, NilpotentDatum> nilpotent_data;  // "<class>/<orbit>"

    bool diagonal() const { return type == "diagonal"; }
};

// Parses and validates; throws DescriptorError with a specific message.
SymmetricPairDescriptor parse_descriptor(const nlohmann::json& j);

// Descriptor of (g x g, diagonal g) for the given Cartan matrix of g.
nlohmann::json diagonal_descriptor_json(const IntMatrix& cartan);

struct RestrictedRoots {
    RootData rd;                              // restricted roots acting on a (torus basis = a basis)
    std::vector<std::vector<Element>> spaces; // basis of g_alpha per root index
    long dim_m = 0;
    long dim_a = 0;
    QMatrix killing_a;                        // Killing form restricted to a
};

RestrictedRoots restricted_roots(const SymmetricPairDescriptor& pair);

struct PairSubpair {
    SubpairDescriptor sub;
    long dim_centralizer = 0;  // dim g^s
};

PairSubpair subpair(const SymmetricPairDescriptor& pair, const RestrictedRoots& rr, const ClassInfo& c);

struct NiceCheck {
    std::optional<bool> nice;  // nullopt: incomplete data without a violation
    std::vector<std::pair<std::string, long>> violations;  // class, lambda
    std::vector<std::string> missing;  // classes lacking distinguished data
};

struct PairStrata {
    StrataResult result;
    NiceCheck nice;
};

PairStrata enumerate_strata_pair(const SymmetricPairDescriptor& pair, Exec exec = Exec::Parallel);

NiceCheck nice_pair_check(const std::vector<ClassSummary>& classes);

}  // namespace hk
