#include "hk/pair.hpp"

#include "hk/qpoly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace hk {

using nlohmann::json;

namespace {

Rational parse_rational(const json& v, const std::string& where) {
    try {
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
    } catch (const std::invalid_argument& e) {
        throw DescriptorError(where + ": " + e.what());
    }
    throw DescriptorError(where + ": expected a rational given as \"p/q\"");
}

std::vector<QVector> parse_vectors(const json& v, std::size_t len, const std::string& where) {
    if (!v.is_array()) throw DescriptorError(where + ": expected an array of vectors");
    std::vector<QVector> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& row = v[i];
        std::string w = where + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != len)
            throw DescriptorError(w + ": expected a vector of length " + std::to_string(len));
        QVector q;
        for (std::size_t k = 0; k < len; ++k) q.push_back(parse_rational(row[k], w));
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<QVector> columns(const QMatrix& m) {
    std::vector<QVector> out;
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
    return out;
}

long span_dim(const std::vector<QVector>& vecs, std::size_t dim) {
    return static_cast<long>(span_basis(vecs, dim).size());
}

std::vector<QVector> apply_all(const QMatrix& m, const std::vector<QVector>& vecs) {
    std::vector<QVector> out;
    for (const auto& v : vecs) out.push_back(m * v);
    return out;
}

}  // namespace

SymmetricPairDescriptor parse_descriptor(const json& j) {
    if (!j.is_object()) throw DescriptorError("descriptor must be a JSON object");
    for (const auto& [key, _] : j.items())
        if (key != "type" && key != "cartan" && key != "involution" && key != "cartan_subspace" && key != "nilpotent_data")
            throw DescriptorError("unknown descriptor field '" + key + "'");
    SymmetricPairDescriptor d;
    if (!j.contains("type") || !j["type"].is_string()) throw DescriptorError("field 'type' must be a string");
    d.type = j["type"].get<std::string>();
    if (!j.contains("cartan") || !j["cartan"].is_array()) throw DescriptorError("field 'cartan' must be an integer matrix");
    for (const auto& row : j["cartan"]) {
        if (!row.is_array()) throw DescriptorError("field 'cartan' must be an integer matrix");
        std::vector<long> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw DescriptorError("field 'cartan' must contain integers");
            r.push_back(x.get<long>());
        }
        d.cartan.push_back(r);
    }
    try {
        d.algebra = chevalley(build_root_system(d.cartan));
    } catch (const CartanError& e) {
        throw DescriptorError(std::string("cartan: ") + e.what());
    }
    const auto& alg = d.algebra;
    const std::size_t n = alg.dim;

    if (!j.contains("involution") || !j["involution"].is_object() || !j["involution"].contains("basis_images"))
        throw DescriptorError("field 'involution.basis_images' is required");
    auto images = parse_vectors(j["involution"]["basis_images"], n, "involution.basis_images");
    if (images.size() != n) throw DescriptorError("involution.basis_images must list one image per basis vector (" +
                                                   std::to_string(n) + ")");
    d.sigma = QMatrix::from_columns(images, n);
    if (!(d.sigma * d.sigma == QMatrix::identity(n))) throw DescriptorError("involution does not square to the identity");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Element lhs = d.sigma * alg.bracket(alg.basis(a), alg.basis(b));
            Element rhs = alg.bracket(d.sigma.column(a), d.sigma.column(b));
            if (lhs != rhs)
                throw DescriptorError("involution does not preserve the bracket on basis pair (" + alg.labels[a] + ", " +
                                      alg.labels[b] + ")");
        }
    QMatrix k = alg.killing_matrix();
    if (!(d.sigma.transpose() * k * d.sigma == k)) throw DescriptorError("involution does not preserve the Killing form");

    if (!j.contains("cartan_subspace")) throw DescriptorError("field 'cartan_subspace' is required");
    d.cartan_subspace = parse_vectors(j["cartan_subspace"], n, "cartan_subspace");
    if (d.cartan_subspace.empty()) throw DescriptorError("cartan_subspace must not be empty");
    if (span_dim(d.cartan_subspace, n) != static_cast<long>(d.cartan_subspace.size()))
        throw DescriptorError("cartan_subspace vectors are linearly dependent");
    for (std::size_t i = 0; i < d.cartan_subspace.size(); ++i) {
        if (d.sigma * d.cartan_subspace[i] != scale(d.cartan_subspace[i], Rational(-1)))
            throw DescriptorError("cartan_subspace[" + std::to_string(i) + "] is not in the -1 eigenspace of the involution");
        for (std::size_t k2 = i + 1; k2 < d.cartan_subspace.size(); ++k2)
            if (!is_zero(alg.bracket(d.cartan_subspace[i], d.cartan_subspace[k2])))
                throw DescriptorError("cartan_subspace is not abelian");
    }

    if (j.contains("nilpotent_data")) {
        const auto& nd = j["nilpotent_data"];
        if (!nd.is_object()) throw DescriptorError("nilpotent_data must be an object");
        for (const auto& [key, val] : nd.items()) {
            auto slash = key.find('/');
            if (slash == std::string::npos || slash == 0 || slash + 1 == key.size() ||
                key.find('/', slash + 1) != std::string::npos)
                throw DescriptorError("nilpotent_data key '" + key + "' must have the form <class>/<orbit>");
            if (!val.is_object() || !val.contains("weights") || !val["weights"].is_array())
                throw DescriptorError("nilpotent_data['" + key + "'].weights must be an integer array");
            NilpotentDatum nd_entry;
            for (const auto& w : val["weights"]) {
                if (!w.is_number_integer() || w.get<long>() < 0)
                    throw DescriptorError("nilpotent_data['" + key + "'].weights must be nonnegative integers");
                nd_entry.weights.push_back(w.get<long>());
            }
            if (!val.contains("distinguished") || !val["distinguished"].is_boolean())
                throw DescriptorError("nilpotent_data['" + key + "'].distinguished must be a boolean");
            nd_entry.distinguished = val["distinguished"].get<bool>();
            d.nilpotent_data[key] = nd_entry;
        }
    }
    if (d.diagonal() && !d.nilpotent_data.empty())
        throw DescriptorError("diagonal descriptors derive their nilpotent data; nilpotent_data must be empty");
    return d;
}

json diagonal_descriptor_json(const IntMatrix& cartan) {
    std::size_t l = cartan.size();
    IntMatrix big(2 * l, std::vector<long>(2 * l, 0));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t k = 0; k < l; ++k) big[i][k] = big[l + i][l + k] = cartan[i][k];
    ChevalleyAlgebra alg = chevalley(build_root_system(big));
    std::size_t n = alg.dim;
    json images = json::array();
    for (std::size_t b = 0; b < n; ++b) {
        int r = alg.root_of_basis(static_cast<int>(b));
        int target;
        if (r < 0) {
            int i = static_cast<int>(b) - alg.basis_of_h(0);
            target = alg.basis_of_h(i < static_cast<int>(l) ? i + static_cast<int>(l) : i - static_cast<int>(l));
        } else {
            Root sw(2 * l);
            for (std::size_t i = 0; i < l; ++i) {
                sw[i] = alg.rs.roots[r][l + i];
                sw[l + i] = alg.rs.roots[r][i];
            }
            target = alg.basis_of_root(alg.rs.find(sw));
        }
        json row = json::array();
        for (std::size_t k = 0; k < n; ++k) row.push_back(static_cast<int>(k) == target ? "1" : "0");
        images.push_back(row);
    }
    json a = json::array();
    for (std::size_t i = 0; i < l; ++i) {
        json v = json::array();
        for (std::size_t k = 0; k < n; ++k) {
            int hk1 = alg.basis_of_h(static_cast<int>(i)), hk2 = alg.basis_of_h(static_cast<int>(i + l));
            v.push_back(static_cast<int>(k) == hk1 ? "1" : static_cast<int>(k) == hk2 ? "-1" : "0");
        }
        a.push_back(v);
    }
    return json{{"type", "diagonal"},
                {"cartan", big},
                {"involution", {{"basis_images", images}}},
                {"cartan_subspace", a},
                {"nilpotent_data", json::object()}};
}

RestrictedRoots restricted_roots(const SymmetricPairDescriptor& pair) {
    const auto& alg = pair.algebra;
    const std::size_t n = alg.dim, r = pair.cartan_subspace.size();
    struct Space {
        std::vector<QVector> basis;
        QVector values;
    };
    std::vector<Space> spaces{{columns(QMatrix::identity(n)), {}}};
    for (std::size_t k = 0; k < r; ++k) {
        QMatrix ad = alg.ad(pair.cartan_subspace[k]);
        std::vector<Space> next;
        for (const auto& sp : spaces) {
            std::size_t dim = sp.basis.size();
            QMatrix b = QMatrix::from_columns(sp.basis, n);
            QMatrix x(dim, dim);
            for (std::size_t c = 0; c < dim; ++c) {
                QVector sol;
                if (!solve(b, ad * sp.basis[c], sol))
                    throw DescriptorError("cartan_subspace elements do not commute on their eigenspaces");
                for (std::size_t i = 0; i < dim; ++i) x(i, c) = sol[i];
            }
            RationalRoots rr = rational_roots(char_poly(x));
            if (!rr.complete)
                throw DescriptorError("ad of cartan_subspace[" + std::to_string(k) +
                                      "] has eigenvalues outside Q; not diagonalizable over the rationals");
            std::size_t total = 0;
            for (const auto& [ev, mult] : rr.roots) {
                auto ker = kernel_basis(x - QMatrix::identity(dim).scaled(ev));
                total += ker.size();
                Space s;
                for (const auto& v : ker) s.basis.push_back(b * v);
                s.values = sp.values;
                s.values.push_back(ev);
                next.push_back(std::move(s));
            }
            if (total != dim)
                throw DescriptorError("ad of cartan_subspace[" + std::to_string(k) + "] is not semisimple");
        }
        spaces = std::move(next);
    }

    QMatrix minus = QMatrix::identity(n) - pair.sigma, plus = QMatrix::identity(n) + pair.sigma;
    RestrictedRoots out;
    out.dim_a = static_cast<long>(r);
    std::vector<Space> roots;
    for (auto& sp : spaces) {
        if (is_zero(sp.values)) {
            long p_part = span_dim(apply_all(minus, sp.basis), n);
            if (p_part != out.dim_a)
                throw DescriptorError("cartan_subspace is not maximal abelian in p (centralizer meets p in dimension " +
                                      std::to_string(p_part) + ")");
            out.dim_m = span_dim(apply_all(plus, sp.basis), n);
        } else {
            roots.push_back(std::move(sp));
        }
    }
    auto find_values = [&](const QVector& v) -> int {
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (roots[i].values == v) return static_cast<int>(i);
        return -1;
    };
    for (std::size_t i = 0; i < roots.size(); ++i) {
        int neg = find_values(scale(roots[i].values, Rational(-1)));
        if (neg < 0) throw DescriptorError("restricted roots are not symmetric");
        std::vector<QVector> both = roots[i].basis;
        both.insert(both.end(), roots[neg].basis.begin(), roots[neg].basis.end());
        long m = static_cast<long>(roots[i].basis.size());
        if (span_dim(apply_all(minus, both), n) != m || span_dim(apply_all(plus, both), n) != m)
            throw DescriptorError("restricted root space is not balanced between k and p");
    }

    out.killing_a = QMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) out.killing_a(i, k) = alg.killing(pair.cartan_subspace[i], pair.cartan_subspace[k]);
    if (determinant(out.killing_a).is_zero()) throw DescriptorError("Killing form is degenerate on cartan_subspace");
    QMatrix kinv = inverse(out.killing_a);

    auto coords = [&](const QVector& v) { return kinv * v; };
    auto positive = [&](const QVector& v) {
        for (const auto& c : coords(v))
            if (!c.is_zero()) return c.sign() > 0;
        return false;
    };
    std::vector<int> pos;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (positive(roots[i].values)) pos.push_back(static_cast<int>(i));
    std::set<int> decomposable;
    for (int a : pos)
        for (int b : pos) {
            int s = find_values(roots[a].values + roots[b].values);
            if (s >= 0) decomposable.insert(s);
        }
    std::vector<int> simple;
    for (int a : pos)
        if (!decomposable.count(a)) simple.push_back(a);
    std::sort(simple.begin(), simple.end(), [&](int a, int b) { return coords(roots[a].values) > coords(roots[b].values); });

    const std::size_t rank = simple.size();
    std::vector<QVector> simple_vals;
    for (int s : simple) simple_vals.push_back(roots[s].values);
    QMatrix smat = QMatrix::from_columns(simple_vals, r);
    std::vector<Root> simple_coords(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        QVector c;
        if (!solve(smat, roots[i].values, c)) throw DescriptorError("restricted roots do not lie in the span of simple roots");
        Root rt;
        bool nonneg = true, nonpos = true;
        for (const auto& x : c) {
            if (!x.is_integer()) throw DescriptorError("restricted root has non-integral simple coordinates");
            rt.push_back(x.to_long());
            nonneg = nonneg && x.sign() >= 0;
            nonpos = nonpos && x.sign() <= 0;
        }
        if (!nonneg && !nonpos) throw DescriptorError("restricted root has mixed-sign simple coordinates");
        simple_coords[i] = rt;
    }

    std::vector<int> order(pos);
    auto height = [&](int i) { return std::accumulate(simple_coords[i].begin(), simple_coords[i].end(), 0L); };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (height(a) != height(b)) return height(a) < height(b);
        return simple_coords[a] > simple_coords[b];
    });
    std::size_t npos = order.size();
    for (std::size_t i = 0; i < npos; ++i) order.push_back(find_values(scale(roots[order[i]].values, Rational(-1))));

    RootData& rd = out.rd;
    rd.rank = static_cast<int>(rank);
    rd.num_positive = npos;
    rd.torus_dim = r;
    rd.gram = QMatrix(rank, rank);
    for (std::size_t a = 0; a < rank; ++a)
        for (std::size_t b = 0; b < rank; ++b)
            rd.gram(a, b) = [&] {
                QVector x = kinv * simple_vals[b];
                Rational s;
                for (std::size_t t = 0; t < r; ++t) s += simple_vals[a][t] * x[t];
                return s;
            }();
    for (int i : order) {
        rd.roots.push_back(simple_coords[i]);
        rd.functionals.push_back(roots[i].values);
        rd.multiplicity.push_back(static_cast<int>(roots[i].basis.size()));
        out.spaces.push_back(roots[i].basis);
    }
    rd.finalize();
    return out;
}

PairSubpair subpair(const SymmetricPairDescriptor& pair, const RestrictedRoots& rr, const ClassInfo& c) {
    const auto& alg = pair.algebra;
    const std::size_t n = alg.dim;
    PairSubpair out;
    out.sub.p_class = c.label;
    out.sub.mask = c.mask;
    out.sub.witness = generic_point(rr.rd, c.mask);
    Element s(n);
    for (std::size_t k = 0; k < pair.cartan_subspace.size(); ++k) s = s + scale(pair.cartan_subspace[k], out.sub.witness[k]);
    auto cent = kernel_basis(alg.ad(s));
    out.dim_centralizer = static_cast<long>(cent.size());
    std::vector<QVector> derived;
    for (std::size_t i = 0; i < cent.size(); ++i)
        for (std::size_t k = i + 1; k < cent.size(); ++k) {
            Element b = alg.bracket(cent[i], cent[k]);
            if (!is_zero(b)) derived.push_back(std::move(b));
        }
    auto dbasis = span_basis(derived, n);
    QMatrix minus = QMatrix::identity(n) - pair.sigma;
    out.sub.reduced_dim = span_dim(apply_all(minus, dbasis), n);
    out.sub.rank_s = c.rank;
    out.sub.dim_s = static_cast<long>(dbasis.size());
    return out;
}

NiceCheck nice_pair_check(const std::vector<ClassSummary>& classes) {
    NiceCheck out;
    for (const auto& c : classes) {
        if (c.redim <= 0) continue;
        if (!c.lambda_min) out.missing.push_back(c.label);
        else if (*c.lambda_min <= 0) out.violations.emplace_back(c.label, *c.lambda_min);
    }
    if (!out.violations.empty()) out.nice = false;
    else if (out.missing.empty()) out.nice = true;
    return out;
}

PairStrata enumerate_strata_pair(const SymmetricPairDescriptor& pair, Exec exec) {
    RestrictedRoots rr = restricted_roots(pair);
    if (pair.diagonal()) {
        bool ok = rr.dim_m == rr.dim_a;
        for (int m : rr.rd.multiplicity) ok = ok && m == 2;
        if (!ok)
            throw DescriptorError("type 'diagonal' requires every restricted multiplicity 2 and dim m = dim a");
    }
    auto classes = classify(rr.rd, exec);
    PairStrata out;
    std::set<std::string> labels;
    std::vector<std::pair<RootMask, std::size_t>> stratum_class;  // mask per stratum index
    for (const auto& c : classes) {
        if (!c.saturated) {
            RootMask sat = canonical_mask(rr.rd, c.saturation);
            std::string target = "?";
            for (const auto& o : classes)
                if (o.mask == sat) target = o.label;
            out.result.replaced.push_back(c.label + " -> " + target);
            continue;
        }
        labels.insert(c.label);
        PairSubpair sp = subpair(pair, rr, c);
        const long redim = sp.sub.reduced_dim;
        ClassSummary summary{c.label, c.mask, true, c.label, redim, sp.sub.rank_s, std::nullopt};

        struct Orbit {
            std::string label;
            std::vector<long> weights;
            bool distinguished;
        };
        std::vector<Orbit> orbits;
        if (pair.diagonal()) {
            for (const auto& o : type_a_orbits(c)) {
                Orbit orb{o.label, {}, o.distinguished};
                for (const auto& p : o.parts)
                    for (int w : adjoint_weights_sln(p).highest_weights) orb.weights.push_back(w);
                orbits.push_back(std::move(orb));
            }
        } else {
            std::string prefix = c.label + "/";
            bool has_zero = false;
            for (const auto& [key, datum] : pair.nilpotent_data) {
                if (key.rfind(prefix, 0) != 0) continue;
                std::string orbit = key.substr(prefix.size());
                has_zero = has_zero || orbit == "0";
                orbits.push_back({orbit, datum.weights, datum.distinguished});
            }
            if (!has_zero) orbits.push_back({"0", std::vector<long>(redim, 0), redim == 0});
        }
        for (const auto& o : orbits) {
            long lambda = -redim;
            for (long w : o.weights) lambda += w + 2;
            Stratum st;
            st.p_class = c.label;
            st.orbit = o.label;
            st.codim = static_cast<long>(o.weights.size());
            st.lambda = lambda;
            st.redim = redim;
            st.trace_t = Rational(lambda + redim, 2);
            st.conic = true;
            st.distinguished = o.distinguished;
            if (o.distinguished && (!summary.lambda_min || lambda < *summary.lambda_min)) summary.lambda_min = lambda;
            out.result.strata.push_back(st);
            stratum_class.emplace_back(c.mask, out.result.strata.size() - 1);
        }
        out.result.classes.push_back(summary);
    }
    for (const auto& [key, _] : pair.nilpotent_data) {
        std::string cls = key.substr(0, key.find('/'));
        if (!labels.count(cls)) {
            std::string valid;
            for (const auto& l : labels) valid += (valid.empty() ? "" : ", ") + l;
            throw DescriptorError("nilpotent_data key '" + key + "' names no saturated class; classes are: " + valid);
        }
    }
    for (const auto& [mask, idx] : stratum_class)
        out.result.strata[idx].mu_bound = mu_invariant(rr.rd, out.result.classes, mask);
    out.nice = nice_pair_check(out.result.classes);
    sort_strata(out.result.strata);
    return out;
}

}  // namespace hk
