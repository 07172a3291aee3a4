#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hk/liealg.hpp"

#include <random>

using namespace hk;

namespace {

const std::vector<std::pair<std::string, std::size_t>> kPositiveCounts{
    {"A1", 1}, {"A2", 3}, {"A3", 6}, {"A4", 10}, {"B2", 4}, {"B3", 9}, {"B4", 16}, {"C3", 9},
    {"C4", 16}, {"D4", 12}, {"G2", 6}, {"F4", 24}, {"E6", 36}, {"A1xA2", 4}};

Element random_element(std::mt19937& rng, int dim) {
    std::uniform_int_distribution<int> d(-3, 3);
    Element x(dim);
    for (auto& c : x) c = Rational(d(rng));
    return x;
}

// dim {X in gl_n : XJ = JX} for the Jordan matrix of p.
long gl_centralizer(const Partition& p) {
    int n = p.size();
    QMatrix j(n, n);
    int off = 0;
    for (int part : p.parts) {
        for (int k = 0; k + 1 < part; ++k) j(off + k, off + k + 1) = 1;
        off += part;
    }
    QMatrix map(n * n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            QMatrix x(n, n);
            x(a, b) = 1;
            QMatrix c = x * j - j * x;
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) map(r * n + s, a * n + b) = c(r, s);
        }
    return static_cast<long>(kernel_basis(map).size());
}

}  // namespace

TEST_CASE("root system sizes") {
    for (const auto& [type, npos] : kPositiveCounts) {
        RootSystem rs = build_root_system(cartan_matrix(type));
        CHECK(rs.num_positive == npos);
        CHECK(rs.roots.size() == 2 * npos);
        for (std::size_t i = 0; i < rs.roots.size(); ++i) CHECK(rs.negative_of(static_cast<int>(i)) >= 0);
    }
    CHECK(cartan_matrix("sl3") == cartan_matrix("A2"));
}

TEST_CASE("invalid Cartan matrices") {
    CHECK_THROWS_AS(validate_cartan({{2, -2}, {-2, 2}}), CartanError);
    CHECK_THROWS_AS(validate_cartan({{2, 1}, {1, 2}}), CartanError);
    CHECK_THROWS_AS(validate_cartan({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), CartanError);
    CHECK_THROWS_AS(validate_cartan({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}), CartanError);
    CHECK_THROWS_AS(validate_cartan({{2, -1}, {0, 2}}), CartanError);
    CHECK_THROWS_AS(cartan_matrix("Z3"), CartanError);
    CHECK_NOTHROW(validate_cartan(cartan_matrix("F4")));
}

TEST_CASE("Jacobi identity through rank 3, serial and parallel") {
    for (const char* type : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2"}) {
        ChevalleyAlgebra alg = chevalley(type);
        CHECK(jacobi_violations(alg, Exec::Serial) == 0);
        CHECK(jacobi_violations(alg, Exec::Parallel) == 0);
    }
}

TEST_CASE("structure constants are +-(p+1)") {
    for (const char* type : {"A3", "B3", "C3", "G2"}) {
        ChevalleyAlgebra alg = chevalley(type);
        const auto& rs = alg.rs;
        for (std::size_t a = 0; a < rs.roots.size(); ++a)
            for (std::size_t b = 0; b < rs.roots.size(); ++b) {
                Root sum(rs.rank);
                for (int i = 0; i < rs.rank; ++i) sum[i] = rs.roots[a][i] + rs.roots[b][i];
                long n = alg.structure_constant(static_cast<int>(a), static_cast<int>(b));
                if (rs.find(sum) < 0) {
                    CHECK(n == 0);
                    continue;
                }
                long p = 0;
                for (;;) {
                    Root r(rs.rank);
                    for (int i = 0; i < rs.rank; ++i) r[i] = rs.roots[b][i] - (p + 1) * rs.roots[a][i];
                    if (rs.find(r) < 0) break;
                    ++p;
                }
                CHECK(std::abs(n) == p + 1);
            }
    }
}

TEST_CASE("bracket antisymmetry and Cartan action") {
    ChevalleyAlgebra alg = chevalley("B2");
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j)
            CHECK(alg.bracket(alg.basis(i), alg.basis(j)) == scale(alg.bracket(alg.basis(j), alg.basis(i)), Rational(-1)));
    for (int i = 0; i < alg.rs.rank; ++i)
        for (std::size_t r = 0; r < alg.rs.roots.size(); ++r) {
            Element e = alg.basis(alg.basis_of_root(static_cast<int>(r)));
            long pairing = alg.rs.coroot_pairing(alg.rs.roots[r], i);
            CHECK(alg.bracket(alg.basis(alg.basis_of_h(i)), e) == scale(e, Rational(pairing)));
        }
}

TEST_CASE("Killing form") {
    ChevalleyAlgebra sl2 = chevalley("A1");
    QMatrix k = sl2.killing_matrix();
    CHECK(to_string(k) == to_string(QMatrix::from_rows({{0, 0, 4}, {0, 8, 0}, {4, 0, 0}}, 3)));
    std::mt19937 rng(17);
    for (const char* type : {"A2", "B2", "G2", "A3", "C3"}) {
        ChevalleyAlgebra alg = chevalley(type);
        for (int t = 0; t < 20; ++t) {
            Element x = random_element(rng, alg.dim), y = random_element(rng, alg.dim), z = random_element(rng, alg.dim);
            CHECK(alg.killing(alg.bracket(x, y), z) == alg.killing(x, alg.bracket(y, z)));
            CHECK(alg.killing(x, y) == (alg.ad(x) * alg.ad(y)).trace());
        }
        CHECK_FALSE(determinant(alg.killing_matrix()).is_zero());
    }
}

TEST_CASE("discriminant on Cartan elements") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> d(-5, 5);
    for (const char* type : {"A1", "A2", "B2", "G2", "A3"}) {
        ChevalleyAlgebra alg = chevalley(type);
        for (int t = 0; t < 10; ++t) {
            std::vector<Rational> c(alg.rs.rank);
            for (auto& x : c) x = Rational(d(rng));
            Rational prod = 1;
            for (std::size_t r = 0; r < alg.rs.roots.size(); ++r) prod *= root_value(alg.rs, static_cast<int>(r), c);
            CharPolyProfile p = delta_profile(alg, cartan_element(alg, c));
            CHECK(p.l == alg.rs.rank);
            CHECK((p.delta == prod || p.delta == -prod));
        }
    }
    ChevalleyAlgebra sl2 = chevalley("A1");
    CHECK(delta_profile(sl2, cartan_element(sl2, {Rational(1)})).delta == Rational(-4));
}

TEST_CASE("partitions") {
    std::vector<std::size_t> counts{1, 2, 3, 5, 7, 11};
    for (int n = 1; n <= 6; ++n) {
        auto ps = partitions(n);
        CHECK(ps.size() == counts[n - 1]);
        CHECK(std::is_sorted(ps.rbegin(), ps.rend()));
        for (const auto& p : ps) {
            CHECK(p.transpose().transpose() == p);
            CHECK(dominates(ps.front(), p));
            CHECK(dominates(p, ps.back()));
        }
    }
    CHECK_FALSE(dominates(Partition{{3, 1, 1, 1}}, Partition{{2, 2, 2}}));
    CHECK_FALSE(dominates(Partition{{2, 2, 2}}, Partition{{3, 1, 1, 1}}));
    CHECK(Partition{{2, 1}}.to_string() == "[2,1]");
}

TEST_CASE("Clebsch-Gordan") {
    CHECK(clebsch_gordan(2, 2).highest_weights == std::vector<int>{4, 2, 0});
    CHECK(clebsch_gordan(3, 1).highest_weights == std::vector<int>{4, 2});
    CHECK(clebsch_gordan(0, 5).highest_weights == std::vector<int>{5});
}

TEST_CASE("lambda of nilpotent orbits in sl_n, four ways") {
    for (int n = 2; n <= 5; ++n) {
        ChevalleyAlgebra alg = chevalley("A" + std::to_string(n - 1));
        auto chain = standard_chain(alg);
        for (const auto& p : partitions(n)) {
            auto w = adjoint_weights_sln(p);
            CHECK(w.dimension() == n * n - 1);
            long from_weights = lambda_invariant(w, n * n - 1);
            long transpose = -1;
            for (int q : p.transpose().parts) transpose += q * q;
            long kernel = static_cast<long>(kernel_basis(alg.ad(nilpotent_representative(alg, chain, p))).size());
            CHECK(from_weights == static_cast<long>(w.highest_weights.size()));
            CHECK(from_weights == transpose);
            CHECK(kernel == transpose);
            CHECK(gl_centralizer(p) - 1 == transpose);
            CHECK(centralizer_dim_sln(p) == transpose);
        }
    }
}
