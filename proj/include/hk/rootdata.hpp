#pragma once

#include "hk/exec.hpp"
#include "hk/liealg.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hk {

using RootMask = std::uint64_t;

struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root system in simple-root coordinates together with its action on a torus (h or a).
// Works for ordinary and restricted (possibly non-reduced) systems alike.
struct RootData {
    int rank = 0;
    std::vector<Root> roots;  // positives first, negatives in the same order
    std::size_t num_positive = 0;
    QMatrix gram;                     // inner products of simple roots
    std::vector<int> multiplicity;    // per root
    std::vector<QVector> functionals; // value of each root on the torus basis
    std::size_t torus_dim = 0;

    // Derived by finalize().
    std::map<Root, int> index;
    std::vector<std::vector<int>> sum;          // root index of r_i + r_j, or -1
    std::vector<std::vector<int>> weyl;         // Weyl group as permutations of root indices
    std::vector<std::array<std::array<RootMask, 256>, 8>> weyl_tables;

    void finalize();
    int find(const Root& r) const;
    int negative_of(int i) const;
    Rational inner(int i, int j) const;
    RootMask all_mask() const;
    RootMask apply(std::size_t w, RootMask m) const;
};

// Roots of g acting on span(h_1..h_l).
RootData root_data(const RootSystem& rs);

struct Component {
    std::string type;         // "A2", "B2", "A1~", ...
    char letter = 'A';
    int rank = 0;
    std::vector<int> simple;  // root indices of the simple roots of the component
    std::vector<int> chain;   // for type A: simple roots in Dynkin path order
};

struct ClassInfo {
    RootMask mask = 0;         // canonical (minimal) representative
    std::string label;
    bool saturated = true;
    RootMask saturation = 0;
    int rank = 0;              // dimension of span(P)
    int size = 0;              // |P|
    std::vector<Component> components;  // sorted by type, then first simple root
    // Permutations of components induced by the stabilizer of mask in W.
    std::vector<std::vector<int>> component_symmetries;
};

// Closed symmetric subsets, one canonical mask per W-orbit, sorted by (|P|, mask).
std::vector<RootMask> closed_symmetric_subsets(const RootData& rd, Exec exec = Exec::Parallel);
constexpr int kEnumerationRankCap = 4;

bool is_closed_symmetric(const RootData& rd, RootMask m);
RootMask canonical_mask(const RootData& rd, RootMask m);
RootMask saturation(const RootData& rd, RootMask m);
int span_rank(const RootData& rd, RootMask m);
std::vector<int> simple_roots_of(const RootData& rd, RootMask m);
std::vector<Component> components_of(const RootData& rd, RootMask m);
std::string component_label(const std::vector<Component>& comps);

// Full classification: labels are made unique by "#k" suffixes in canonical order.
std::vector<ClassInfo> classify(const RootData& rd, Exec exec = Exec::Parallel);

// Is some W-conjugate of sub contained in sup?
bool conjugate_subset(const RootData& rd, RootMask sub, RootMask sup);

// Point of the torus (integer coordinates) where exactly the roots of m vanish.
QVector generic_point(const RootData& rd, RootMask m);

struct NotSaturatedError : std::invalid_argument {
    RootMask saturation;
    NotSaturatedError(const std::string& msg, RootMask sat) : std::invalid_argument(msg), saturation(sat) {}
};

// Canonical partition tuples for the type-A components of a class under its symmetries.
struct OrbitTuple {
    std::vector<Partition> parts;  // one per component, component order
    std::string label;             // "0" for the empty class
    bool distinguished = false;    // every factor regular
};
std::vector<OrbitTuple> type_a_orbits(const ClassInfo& c);

}  // namespace hk
