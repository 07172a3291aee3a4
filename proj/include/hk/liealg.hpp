#pragma once

#include "hk/exec.hpp"
#include "hk/qmatrix.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hk {

using IntMatrix = std::vector<std::vector<long>>;
using Root = std::vector<long>;  // coordinates in the simple-root basis
using Element = QVector;

struct CartanError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// "A3", "B2", "C3", "D4", "E6", "F4", "G2", or "sl4"; products joined with 'x' ("A1xA2").
IntMatrix cartan_matrix(const std::string& type);
// Throws CartanError unless m is a finite-type Cartan matrix.
void validate_cartan(const IntMatrix& m);
// Half squared lengths d_i of the simple roots with d_i A_ij = d_j A_ji, shortest 1 per component.
std::vector<Rational> symmetrizer(const IntMatrix& m);

struct RootSystem {
    int rank = 0;
    IntMatrix cartan;
    std::vector<Rational> half_norm;  // d_i
    // Positive roots ordered by height then descending coordinates, then negatives in the same order.
    std::vector<Root> roots;
    std::vector<bool> positive;
    std::size_t num_positive = 0;
    std::map<Root, int> index;

    int find(const Root& r) const;
    int negative_of(int i) const;
    Rational inner(const Root& a, const Root& b) const;
    long coroot_pairing(const Root& beta, int i) const;  // <beta, alpha_i^vee>
    long height(int i) const;
};

RootSystem build_root_system(const IntMatrix& cartan, std::size_t cap = 4096);

// Basis: e_alpha for positive roots, h_1..h_l, e_alpha for negative roots (root-system order).
class ChevalleyAlgebra {
public:
    using Sparse = std::vector<std::pair<int, long>>;

    RootSystem rs;
    int dim = 0;
    std::vector<std::string> labels;

    int basis_of_root(int r) const;
    int basis_of_h(int i) const { return static_cast<int>(rs.num_positive) + i; }
    int root_of_basis(int b) const;  // -1 for Cartan basis vectors
    const Sparse& bracket_basis(int i, int j) const { return table_[i * dim + j]; }
    long structure_constant(int a, int b) const;  // N_{alpha,beta}, 0 if alpha+beta is not a root

    Element zero() const { return Element(dim); }
    Element basis(int i) const;
    Element bracket(const Element& x, const Element& y) const;
    QMatrix ad(const Element& x) const;
    Rational killing(const Element& x, const Element& y) const;
    QMatrix killing_matrix() const;

private:
    friend ChevalleyAlgebra chevalley(const RootSystem& rs);
    std::vector<Sparse> table_;
    std::map<std::pair<int, int>, long> n_;
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

ChevalleyAlgebra chevalley(const RootSystem& rs);
ChevalleyAlgebra chevalley(const std::string& type);

// Number of basis triples violating the Jacobi identity.
long jacobi_violations(const ChevalleyAlgebra& alg, Exec exec = Exec::Parallel);

struct CharPolyProfile {
    std::vector<Rational> p;  // det(t - ad x) = sum (-1)^(n-i) p_i t^i
    int l = 0;
    Rational delta;
};
CharPolyProfile delta_profile(const ChevalleyAlgebra& alg, const Element& x);

// Cartan element sum c_i h_i.
Element cartan_element(const ChevalleyAlgebra& alg, const std::vector<Rational>& c);
// alpha(sum c_i h_i)
Rational root_value(const RootSystem& rs, int root, const std::vector<Rational>& c);

struct Partition {
    std::vector<int> parts;
    int size() const;
    Partition transpose() const;
    std::string to_string() const;  // "[2,1]"
    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};
std::vector<Partition> partitions(int n);  // lexicographically descending
bool dominates(const Partition& a, const Partition& b);  // a >= b in dominance order

struct Sl2WeightDecomposition {
    std::vector<int> highest_weights;  // descending
    int dimension() const;
};

Sl2WeightDecomposition clebsch_gordan(int a, int b);
Sl2WeightDecomposition adjoint_weights_sln(const Partition& p);
long lambda_invariant(const Sl2WeightDecomposition& w, long dim_p);
long centralizer_dim_sln(const Partition& p);

// Sum of root vectors e_{beta_i} over consecutive chain segments, one segment per part.
// chain lists root indices forming an A_k Dynkin path; partition of k+1.
Element nilpotent_representative(const ChevalleyAlgebra& alg, const std::vector<int>& chain, const Partition& p);
// Chain of simple roots 0..n-2 for sl_n built from cartan_matrix("A{n-1}").
std::vector<int> standard_chain(const ChevalleyAlgebra& alg);

}  // namespace hk
