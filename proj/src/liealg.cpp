#include "hk/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace hk {

namespace {

IntMatrix simple_cartan(char letter, int n) {
    IntMatrix m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 2;
    auto link = [&](int i, int j) { m[i][j] = m[j][i] = -1; };
    switch (letter) {
    case 'A':
        if (n < 1) break;
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        return m;
    case 'B':
        if (n < 2) break;
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        m[n - 1][n - 2] = -2;
        return m;
    case 'C':
        if (n < 2) break;
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        m[n - 2][n - 1] = -2;
        return m;
    case 'D':
        if (n < 4) break;
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        return m;
    case 'E':
        if (n < 6 || n > 8) break;
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
        return m;
    case 'F':
        if (n != 4) break;
        link(0, 1);
        link(2, 3);
        m[1][2] = -1;
        m[2][1] = -2;
        return m;
    case 'G':
        if (n != 2) break;
        m[0][1] = -3;
        m[1][0] = -1;
        return m;
    default:
        break;
    }
    throw CartanError(std::string("unknown or invalid Cartan type ") + letter + std::to_string(n));
}

IntMatrix one_type(const std::string& t) {
    if (t.size() > 2 && t.rfind("sl", 0) == 0) {
        int n = std::stoi(t.substr(2));
        if (n < 2) throw CartanError("sl_n needs n >= 2");
        return simple_cartan('A', n - 1);
    }
    if (t.size() < 2 || !std::isupper(static_cast<unsigned char>(t[0])))
        throw CartanError("unrecognized algebra type '" + t + "'");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            throw CartanError("unrecognized algebra type '" + t + "'");
    return simple_cartan(t[0], std::stoi(t.substr(1)));
}

}  // namespace

IntMatrix cartan_matrix(const std::string& type) {
    std::vector<IntMatrix> blocks;
    std::size_t start = 0;
    for (;;) {
        std::size_t x = type.find('x', start);
        blocks.push_back(one_type(type.substr(start, x == std::string::npos ? std::string::npos : x - start)));
        if (x == std::string::npos) break;
        start = x + 1;
    }
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    IntMatrix m(n, std::vector<long>(n, 0));
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) m[off + i][off + j] = b[i][j];
        off += b.size();
    }
    return m;
}

std::vector<Rational> symmetrizer(const IntMatrix& m) {
    std::size_t n = m.size();
    std::vector<Rational> d(n);
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = true;
        d[s] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            std::size_t i = comp[k];
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || m[i][j] == 0) continue;
                Rational dj = d[i] * Rational(m[i][j]) / Rational(m[j][i]);
                if (!seen[j]) {
                    seen[j] = true;
                    d[j] = dj;
                    comp.push_back(j);
                } else if (d[j] != dj) {
                    throw CartanError("Cartan matrix is not symmetrizable");
                }
            }
        }
        Rational mn = d[s];
        for (auto i : comp) mn = std::min(mn, d[i]);
        for (auto i : comp) d[i] /= mn;
    }
    return d;
}

void validate_cartan(const IntMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) throw CartanError("empty Cartan matrix");
    for (const auto& row : m)
        if (row.size() != n) throw CartanError("Cartan matrix must be square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j && m[i][j] != 2) throw CartanError("Cartan matrix diagonal entries must be 2");
            if (i != j && m[i][j] > 0) throw CartanError("Cartan matrix off-diagonal entries must be <= 0");
            if (i != j && (m[i][j] == 0) != (m[j][i] == 0))
                throw CartanError("Cartan matrix zero pattern must be symmetric");
        }
    auto d = symmetrizer(m);
    for (std::size_t k = 1; k <= n; ++k) {
        QMatrix b(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) b(i, j) = d[i] * Rational(m[i][j]);
        if (determinant(b).sign() <= 0) throw CartanError("Cartan matrix is not of finite type");
    }
}

int RootSystem::find(const Root& r) const {
    auto it = index.find(r);
    return it == index.end() ? -1 : it->second;
}

int RootSystem::negative_of(int i) const {
    std::size_t m = num_positive;
    return static_cast<std::size_t>(i) < m ? i + static_cast<int>(m) : i - static_cast<int>(m);
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
    Rational s;
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank; ++j)
            if (b[j] != 0 && cartan[i][j] != 0) s += Rational(a[i] * b[j] * cartan[i][j]) * half_norm[i];
    }
    return s;
}

long RootSystem::coroot_pairing(const Root& beta, int i) const {
    long s = 0;
    for (int j = 0; j < rank; ++j) s += beta[j] * cartan[i][j];
    return s;
}

long RootSystem::height(int i) const {
    return std::accumulate(roots[i].begin(), roots[i].end(), 0L);
}

RootSystem build_root_system(const IntMatrix& cartan, std::size_t cap) {
    validate_cartan(cartan);
    RootSystem rs;
    rs.rank = static_cast<int>(cartan.size());
    rs.cartan = cartan;
    rs.half_norm = symmetrizer(cartan);
    std::set<Root> found;
    std::queue<Root> todo;
    for (int i = 0; i < rs.rank; ++i) {
        Root r(rs.rank, 0);
        r[i] = 1;
        found.insert(r);
        todo.push(r);
    }
    while (!todo.empty()) {
        Root b = todo.front();
        todo.pop();
        for (int i = 0; i < rs.rank; ++i) {
            Root c = b;
            c[i] -= rs.coroot_pairing(b, i);
            if (found.insert(c).second) {
                if (found.size() > cap) throw CartanError("root closure exceeded safety cap; not of finite type");
                todo.push(c);
            }
        }
    }
    std::vector<Root> pos;
    for (const auto& r : found)
        if (std::all_of(r.begin(), r.end(), [](long x) { return x >= 0; })) pos.push_back(r);
    auto h = [](const Root& r) { return std::accumulate(r.begin(), r.end(), 0L); };
    std::sort(pos.begin(), pos.end(), [&](const Root& a, const Root& b) {
        if (h(a) != h(b)) return h(a) < h(b);
        return a > b;
    });
    if (pos.size() * 2 != found.size()) throw CartanError("root set is not symmetric");
    rs.num_positive = pos.size();
    rs.roots = pos;
    for (const auto& r : pos) {
        Root n = r;
        for (auto& x : n) x = -x;
        rs.roots.push_back(n);
    }
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        rs.index[rs.roots[i]] = static_cast<int>(i);
        rs.positive.push_back(i < pos.size());
    }
    return rs;
}

int ChevalleyAlgebra::basis_of_root(int r) const {
    return static_cast<std::size_t>(r) < rs.num_positive ? r : r + rs.rank;
}

int ChevalleyAlgebra::root_of_basis(int b) const {
    int m = static_cast<int>(rs.num_positive);
    if (b < m) return b;
    if (b < m + rs.rank) return -1;
    return b - rs.rank;
}

long ChevalleyAlgebra::structure_constant(int a, int b) const {
    auto it = n_.find({a, b});
    return it == n_.end() ? 0 : it->second;
}

Element ChevalleyAlgebra::basis(int i) const {
    Element e(dim);
    e.at(i) = 1;
    return e;
}

Element ChevalleyAlgebra::bracket(const Element& x, const Element& y) const {
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
        throw DimensionError("element length does not match algebra dimension");
    Element out(dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Rational c = x[i] * y[j];
            for (const auto& [k, v] : table_[i * dim + j]) out[k] += c * Rational(v);
        }
    }
    return out;
}

QMatrix ChevalleyAlgebra::ad(const Element& x) const {
    if (static_cast<int>(x.size()) != dim) throw DimensionError("element length does not match algebra dimension");
    QMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j)
            for (const auto& [k, v] : table_[i * dim + j]) m(k, j) += x[i] * Rational(v);
    }
    return m;
}

Rational ChevalleyAlgebra::killing(const Element& x, const Element& y) const {
    QMatrix a = ad(x), b = ad(y);
    Rational s;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (!a(i, j).is_zero() && !b(j, i).is_zero()) s += a(i, j) * b(j, i);
    return s;
}

QMatrix ChevalleyAlgebra::killing_matrix() const {
    std::vector<QMatrix> ads;
    for (int i = 0; i < dim; ++i) ads.push_back(ad(basis(i)));
    QMatrix k(dim, dim);
    for (int a = 0; a < dim; ++a)
        for (int b = a; b < dim; ++b) {
            Rational s;
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    if (!ads[a](i, j).is_zero() && !ads[b](j, i).is_zero()) s += ads[a](i, j) * ads[b](j, i);
            k(a, b) = s;
            k(b, a) = s;
        }
    return k;
}

namespace {

Root add(const Root& a, const Root& b, long sb = 1) {
    Root r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += sb * b[i];
    return r;
}

// Structure constants from the extraspecial-pair normalization: for each positive non-simple
// root the lexicographically first decomposition alpha+beta gets N = p+1; the remaining
// constants follow from the standard relations among N.
class NSolver {
public:
    explicit NSolver(const RootSystem& rs) : rs_(rs) {}

    long n(int a, int b) {
        int s = sum(a, b);
        if (s < 0) return 0;
        auto key = std::make_pair(a, b);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (++depth_ > 10000) throw InternalError("structure constant recursion did not terminate");
        long v = compute(a, b, s);
        --depth_;
        memo_[key] = v;
        return v;
    }

private:
    const RootSystem& rs_;
    std::map<std::pair<int, int>, long> memo_;
    int depth_ = 0;

    int sum(int a, int b) const {
        if (a == rs_.negative_of(b)) return -1;
        return rs_.find(add(rs_.roots[a], rs_.roots[b]));
    }
    Rational norm(int a) const { return rs_.inner(rs_.roots[a], rs_.roots[a]); }
    long p_value(int a, int b) const {
        long p = 0;
        while (rs_.find(add(rs_.roots[b], rs_.roots[a], -(p + 1))) >= 0) ++p;
        return p;
    }
    std::pair<int, int> extraspecial(int xi) const {
        for (int a = 0; a < static_cast<int>(rs_.num_positive); ++a)
            for (int b = a + 1; b < static_cast<int>(rs_.num_positive); ++b)
                if (sum(a, b) == xi) return {a, b};
        throw InternalError("positive root without decomposition");
    }
    static long exact(const Rational& r) {
        if (!r.is_integer()) throw InternalError("non-integral structure constant " + r.to_string());
        return r.to_long();
    }

    long compute(int a, int b, int s) {
        bool pa = rs_.positive[a], pb = rs_.positive[b];
        if (pa && pb) {
            if (a > b) return -n(b, a);
            auto [a0, b0] = extraspecial(s);
            if (a == a0 && b == b0) return p_value(a, b) + 1;
            int na0 = rs_.negative_of(a0), nb0 = rs_.negative_of(b0);
            Rational acc;
            if (rs_.find(add(rs_.roots[b], rs_.roots[a0], -1)) >= 0) {
                Rational nn = norm(rs_.find(add(rs_.roots[b], rs_.roots[a0], -1)));
                acc += Rational(n(b, na0) * n(a, nb0)) / nn;
            }
            if (rs_.find(add(rs_.roots[a], rs_.roots[a0], -1)) >= 0) {
                Rational nn = norm(rs_.find(add(rs_.roots[a], rs_.roots[a0], -1)));
                acc += Rational(n(na0, a) * n(b, nb0)) / nn;
            }
            return exact(norm(s) / Rational(n(a0, b0)) * acc);
        }
        if (!pa && !pb) return -n(rs_.negative_of(a), rs_.negative_of(b));
        int g = rs_.negative_of(s);  // a + b + g = 0
        if (rs_.positive[g] == pb) return exact(Rational(n(b, g)) * norm(g) / norm(a));
        return exact(Rational(n(g, a)) * norm(g) / norm(b));
    }
};

}  // namespace

ChevalleyAlgebra chevalley(const RootSystem& rs) {
    ChevalleyAlgebra alg;
    alg.rs = rs;
    int m = static_cast<int>(rs.num_positive), l = rs.rank;
    alg.dim = 2 * m + l;
    int dim = alg.dim;
    alg.table_.assign(static_cast<std::size_t>(dim) * dim, {});

    auto root_label = [&](int r) {
        std::ostringstream os;
        os << "e[";
        for (int i = 0; i < l; ++i) os << (i ? "," : "") << rs.roots[r][i];
        os << "]";
        return os.str();
    };
    alg.labels.resize(dim);
    for (int r = 0; r < 2 * m; ++r) alg.labels[alg.basis_of_root(r)] = root_label(r);
    for (int i = 0; i < l; ++i) alg.labels[alg.basis_of_h(i)] = "h" + std::to_string(i + 1);

    NSolver solver(rs);
    for (int a = 0; a < 2 * m; ++a)
        for (int b = 0; b < 2 * m; ++b) {
            long v = solver.n(a, b);
            if (v != 0) alg.n_[{a, b}] = v;
        }

    auto set = [&](int i, int j, ChevalleyAlgebra::Sparse s) {
        alg.table_[i * dim + j] = s;
        for (auto& [k, v] : s) v = -v;
        alg.table_[j * dim + i] = s;
    };
    for (int i = 0; i < l; ++i)
        for (int r = 0; r < 2 * m; ++r) {
            long c = rs.coroot_pairing(rs.roots[r], i);
            if (c != 0) set(alg.basis_of_h(i), alg.basis_of_root(r), {{alg.basis_of_root(r), c}});
        }
    for (int a = 0; a < 2 * m; ++a)
        for (int b = a + 1; b < 2 * m; ++b) {
            if (b == rs.negative_of(a)) {
                // [e_a, e_-a] = h_a, the coroot of a in terms of simple coroots.
                int pos = rs.positive[a] ? a : b;
                long sign = rs.positive[a] ? 1 : -1;
                Rational na = rs.inner(rs.roots[pos], rs.roots[pos]);
                ChevalleyAlgebra::Sparse s;
                for (int i = 0; i < l; ++i) {
                    if (rs.roots[pos][i] == 0) continue;
                    Rational c = Rational(rs.roots[pos][i]) * Rational(2) * rs.half_norm[i] / na;
                    if (!c.is_integer()) throw InternalError("non-integral coroot coefficient");
                    s.emplace_back(alg.basis_of_h(i), sign * c.to_long());
                }
                set(alg.basis_of_root(a), alg.basis_of_root(b), s);
                continue;
            }
            long v = alg.structure_constant(a, b);
            if (v == 0) continue;
            int s = rs.find(add(rs.roots[a], rs.roots[b]));
            set(alg.basis_of_root(a), alg.basis_of_root(b), {{alg.basis_of_root(s), v}});
        }
    for (const auto& [key, v] : alg.n_) {
        long p = 0;
        while (rs.find(add(rs.roots[key.second], rs.roots[key.first], -(p + 1))) >= 0) ++p;
        if (std::labs(v) != p + 1) throw InternalError("structure constant is not +-(p+1)");
    }
    if (jacobi_violations(alg, Exec::Serial) != 0) throw InternalError("Chevalley construction violates Jacobi");
    return alg;
}

ChevalleyAlgebra chevalley(const std::string& type) { return chevalley(build_root_system(cartan_matrix(type))); }

namespace {

using Dense = std::vector<long>;

void bracket_into(const ChevalleyAlgebra& alg, int i, const Dense& y, long scale, Dense& out) {
    for (int j = 0; j < alg.dim; ++j) {
        if (y[j] == 0) continue;
        for (const auto& [k, v] : alg.bracket_basis(i, j)) out[k] += scale * v * y[j];
    }
}

Dense basis_bracket(const ChevalleyAlgebra& alg, int i, int j) {
    Dense d(alg.dim, 0);
    for (const auto& [k, v] : alg.bracket_basis(i, j)) d[k] += v;
    return d;
}

long jacobi_row(const ChevalleyAlgebra& alg, int i) {
    long bad = 0;
    for (int j = i + 1; j < alg.dim; ++j)
        for (int k = j + 1; k < alg.dim; ++k) {
            Dense acc(alg.dim, 0);
            bracket_into(alg, i, basis_bracket(alg, j, k), 1, acc);
            bracket_into(alg, j, basis_bracket(alg, k, i), 1, acc);
            bracket_into(alg, k, basis_bracket(alg, i, j), 1, acc);
            if (std::any_of(acc.begin(), acc.end(), [](long x) { return x != 0; })) ++bad;
        }
    return bad;
}

}  // namespace

long jacobi_violations(const ChevalleyAlgebra& alg, Exec exec) {
    long bad = 0;
    if (exec == Exec::Serial) {
        for (int i = 0; i < alg.dim; ++i) bad += jacobi_row(alg, i);
        return bad;
    }
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
    for (int i = 0; i < alg.dim; ++i) bad += jacobi_row(alg, i);
    return bad;
}

CharPolyProfile delta_profile(const ChevalleyAlgebra& alg, const Element& x) {
    auto c = char_poly(alg.ad(x));
    CharPolyProfile prof;
    std::size_t n = c.size() - 1;
    for (std::size_t i = 0; i <= n; ++i) prof.p.push_back((n - i) % 2 ? -c[i] : c[i]);
    prof.l = alg.rs.rank;
    prof.delta = prof.p[prof.l];
    return prof;
}

Element cartan_element(const ChevalleyAlgebra& alg, const std::vector<Rational>& c) {
    if (static_cast<int>(c.size()) != alg.rs.rank) throw DimensionError("Cartan coordinates length mismatch");
    Element e(alg.dim);
    for (int i = 0; i < alg.rs.rank; ++i) e[alg.basis_of_h(i)] = c[i];
    return e;
}

Rational root_value(const RootSystem& rs, int root, const std::vector<Rational>& c) {
    Rational s;
    for (int i = 0; i < rs.rank; ++i) s += c[i] * Rational(rs.coroot_pairing(rs.roots[root], i));
    return s;
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::transpose() const {
    Partition t;
    if (parts.empty()) return t;
    for (int k = 1; k <= parts.front(); ++k) {
        int c = 0;
        for (int p : parts)
            if (p >= k) ++c;
        t.parts.push_back(c);
    }
    return t;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + "]";
}

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (int k = std::min(left, maxp); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    std::size_t len = std::max(a.parts.size(), b.parts.size());
    for (std::size_t i = 0; i < len; ++i) {
        sa += i < a.parts.size() ? a.parts[i] : 0;
        sb += i < b.parts.size() ? b.parts[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

int Sl2WeightDecomposition::dimension() const {
    int d = 0;
    for (int w : highest_weights) d += w + 1;
    return d;
}

Sl2WeightDecomposition clebsch_gordan(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("highest weights must be nonnegative");
    Sl2WeightDecomposition d;
    for (int k = 0; k <= std::min(a, b); ++k) d.highest_weights.push_back(a + b - 2 * k);
    return d;
}

Sl2WeightDecomposition adjoint_weights_sln(const Partition& p) {
    if (p.size() < 2) throw std::invalid_argument("adjoint weights need n >= 2");
    std::vector<int> w;
    for (int a : p.parts)
        for (int b : p.parts)
            for (int x : clebsch_gordan(a - 1, b - 1).highest_weights) w.push_back(x);
    auto it = std::find(w.begin(), w.end(), 0);
    w.erase(it);  // gl_n -> sl_n drops one trivial summand
    std::sort(w.rbegin(), w.rend());
    return Sl2WeightDecomposition{w};
}

long lambda_invariant(const Sl2WeightDecomposition& w, long dim_p) {
    long s = 0;
    for (int x : w.highest_weights) s += x + 2;
    return s - dim_p;
}

long centralizer_dim_sln(const Partition& p) {
    long s = 0;
    for (int x : p.transpose().parts) s += static_cast<long>(x) * x;
    return s - 1;
}

Element nilpotent_representative(const ChevalleyAlgebra& alg, const std::vector<int>& chain, const Partition& p) {
    if (p.size() != static_cast<int>(chain.size()) + 1)
        throw std::invalid_argument("partition size must be chain length + 1");
    Element x(alg.dim);
    std::size_t pos = 0;
    for (int part : p.parts) {
        for (int k = 0; k + 1 < part; ++k) x[alg.basis_of_root(chain[pos + k])] = 1;
        pos += part;
    }
    return x;
}

std::vector<int> standard_chain(const ChevalleyAlgebra& alg) {
    std::vector<int> c;
    for (int i = 0; i < alg.rs.rank; ++i) {
        Root r(alg.rs.rank, 0);
        r[i] = 1;
        c.push_back(alg.rs.find(r));
    }
    return c;
}

}  // namespace hk
