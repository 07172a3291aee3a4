#include "hk/rootdata.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>

namespace hk {

int RootData::find(const Root& r) const {
    auto it = index.find(r);
    return it == index.end() ? -1 : it->second;
}

int RootData::negative_of(int i) const {
    int m = static_cast<int>(num_positive);
    return i < m ? i + m : i - m;
}

Rational RootData::inner(int i, int j) const {
    Rational s;
    for (int a = 0; a < rank; ++a) {
        if (roots[i][a] == 0) continue;
        for (int b = 0; b < rank; ++b)
            if (roots[j][b] != 0) s += Rational(roots[i][a] * roots[j][b]) * gram(a, b);
    }
    return s;
}

RootMask RootData::all_mask() const {
    return roots.size() == 64 ? ~RootMask(0) : (RootMask(1) << roots.size()) - 1;
}

RootMask RootData::apply(std::size_t w, RootMask m) const {
    const auto& t = weyl_tables[w];
    RootMask out = 0;
    for (int b = 0; b < 8 && m; ++b, m >>= 8) out |= t[b][m & 0xff];
    return out;
}

void RootData::finalize() {
    if (roots.size() > 64) throw UnsupportedError("root systems with more than 64 roots are not supported");
    index.clear();
    for (std::size_t i = 0; i < roots.size(); ++i) index[roots[i]] = static_cast<int>(i);
    std::size_t n = roots.size();
    sum.assign(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (static_cast<int>(j) == negative_of(static_cast<int>(i))) continue;
            Root s = roots[i];
            for (int k = 0; k < rank; ++k) s[k] += roots[j][k];
            sum[i][j] = find(s);
        }

    std::vector<std::vector<int>> gens;
    for (int k = 0; k < rank; ++k) {
        Root e(rank, 0);
        e[k] = 1;
        int sk = find(e);
        if (sk < 0) throw InternalError("simple root missing from root data");
        std::vector<int> perm(n);
        Rational nk = inner(sk, sk);
        for (std::size_t i = 0; i < n; ++i) {
            Rational c = Rational(2) * inner(static_cast<int>(i), sk) / nk;
            if (!c.is_integer()) throw InternalError("non-integral reflection coefficient");
            Root r = roots[i];
            r[k] -= c.to_long();
            perm[i] = find(r);
            if (perm[i] < 0) throw InternalError("root set not closed under reflections");
        }
        gens.push_back(perm);
    }
    std::vector<int> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
    std::set<std::vector<int>> group{id};
    std::queue<std::vector<int>> todo;
    todo.push(id);
    while (!todo.empty()) {
        auto g = todo.front();
        todo.pop();
        for (const auto& s : gens) {
            std::vector<int> h(n);
            for (std::size_t i = 0; i < n; ++i) h[i] = s[g[i]];
            if (group.insert(h).second) todo.push(h);
        }
    }
    weyl.assign(group.begin(), group.end());
    weyl_tables.assign(weyl.size(), {});
    for (std::size_t w = 0; w < weyl.size(); ++w)
        for (int b = 0; b < 8; ++b)
            for (int v = 0; v < 256; ++v) {
                RootMask out = 0;
                for (int bit = 0; bit < 8; ++bit) {
                    std::size_t i = static_cast<std::size_t>(8 * b + bit);
                    if ((v >> bit & 1) && i < n) out |= RootMask(1) << weyl[w][i];
                }
                weyl_tables[w][b][v] = out;
            }
}

RootData root_data(const RootSystem& rs) {
    RootData rd;
    rd.rank = rs.rank;
    rd.roots = rs.roots;
    rd.num_positive = rs.num_positive;
    rd.gram = QMatrix(rs.rank, rs.rank);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) rd.gram(i, j) = rs.half_norm[i] * Rational(rs.cartan[i][j]);
    rd.multiplicity.assign(rs.roots.size(), 1);
    rd.torus_dim = rs.rank;
    for (const auto& r : rs.roots) {
        QVector f(rs.rank);
        for (int k = 0; k < rs.rank; ++k) f[k] = Rational(rs.coroot_pairing(r, k));
        rd.functionals.push_back(f);
    }
    rd.finalize();
    return rd;
}

bool is_closed_symmetric(const RootData& rd, RootMask m) {
    for (RootMask a = m; a; a &= a - 1) {
        int i = std::countr_zero(a);
        if (!(m >> rd.negative_of(i) & 1)) return false;
        for (RootMask b = a; b; b &= b - 1) {
            int j = std::countr_zero(b);
            int s = rd.sum[i][j];
            if (s >= 0 && !(m >> s & 1)) return false;
        }
    }
    return true;
}

RootMask canonical_mask(const RootData& rd, RootMask m) {
    RootMask best = m;
    for (std::size_t w = 0; w < rd.weyl.size(); ++w) best = std::min(best, rd.apply(w, m));
    return best;
}

namespace {

bool orbit_minimal(const RootData& rd, RootMask m) {
    for (std::size_t w = 0; w < rd.weyl.size(); ++w)
        if (rd.apply(w, m) < m) return false;
    return true;
}

bool closed_positive_part(const RootData& rd, RootMask m) {
    // Symmetric by construction; closure checked on all pairs.
    for (RootMask a = m; a; a &= a - 1) {
        int i = std::countr_zero(a);
        for (RootMask b = m; b; b &= b - 1) {
            int s = rd.sum[i][std::countr_zero(b)];
            if (s >= 0 && !(m >> s & 1)) return false;
        }
    }
    return true;
}

QVector as_vector(const Root& r) {
    QVector v;
    for (long x : r) v.emplace_back(x);
    return v;
}

bool in_row_span(const std::vector<QVector>& rref_rows, const std::vector<std::size_t>& pivots, QVector v) {
    for (std::size_t k = 0; k < rref_rows.size(); ++k) {
        Rational f = v[pivots[k]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rref_rows[k][j];
    }
    return is_zero(v);
}

struct RowSpace {
    std::vector<QVector> rows;
    std::vector<std::size_t> pivots;
};

RowSpace row_space(const std::vector<QVector>& vecs, std::size_t dim) {
    RowSpace rs;
    if (vecs.empty()) return rs;
    QMatrix r = rref(QMatrix::from_rows(vecs, dim), &rs.pivots);
    for (std::size_t k = 0; k < rs.pivots.size(); ++k) rs.rows.push_back(r.row(k));
    return rs;
}

}  // namespace

std::vector<RootMask> closed_symmetric_subsets(const RootData& rd, Exec exec) {
    if (rd.rank > kEnumerationRankCap)
        throw UnsupportedError("closed subset enumeration is limited to rank <= " + std::to_string(kEnumerationRankCap) +
                               " (got rank " + std::to_string(rd.rank) + ")");
    const std::size_t m = rd.num_positive;
    const long long total = 1LL << m;
    std::vector<RootMask> found;
    auto visit = [&](long long pm, std::vector<RootMask>& out) {
        RootMask full = static_cast<RootMask>(pm) | (static_cast<RootMask>(pm) << m);
        if (closed_positive_part(rd, full) && orbit_minimal(rd, full)) out.push_back(full);
    };
    if (exec == Exec::Serial) {
        for (long long pm = 0; pm < total; ++pm) visit(pm, found);
    } else {
#pragma omp parallel
        {
            std::vector<RootMask> local;
#pragma omp for schedule(dynamic, 1024) nowait
            for (long long pm = 0; pm < total; ++pm) visit(pm, local);
#pragma omp critical
            found.insert(found.end(), local.begin(), local.end());
        }
    }
    std::sort(found.begin(), found.end(), [](RootMask a, RootMask b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return found;
}

int span_rank(const RootData& rd, RootMask m) {
    std::vector<QVector> vecs;
    for (RootMask a = m; a; a &= a - 1) vecs.push_back(as_vector(rd.roots[std::countr_zero(a)]));
    return static_cast<int>(row_space(vecs, rd.rank).rows.size());
}

RootMask saturation(const RootData& rd, RootMask m) {
    std::vector<QVector> vecs;
    for (RootMask a = m; a; a &= a - 1) vecs.push_back(as_vector(rd.roots[std::countr_zero(a)]));
    RowSpace rs = row_space(vecs, rd.rank);
    RootMask out = 0;
    for (std::size_t i = 0; i < rd.roots.size(); ++i)
        if (in_row_span(rs.rows, rs.pivots, as_vector(rd.roots[i]))) out |= RootMask(1) << i;
    return out;
}

std::vector<int> simple_roots_of(const RootData& rd, RootMask m) {
    std::vector<int> pos;
    for (RootMask a = m; a; a &= a - 1) {
        int i = std::countr_zero(a);
        if (static_cast<std::size_t>(i) < rd.num_positive) pos.push_back(i);
    }
    std::set<int> decomposable;
    for (int i : pos)
        for (int j : pos)
            if (rd.sum[i][j] >= 0) decomposable.insert(rd.sum[i][j]);
    std::vector<int> out;
    for (int i : pos)
        if (!decomposable.count(i)) out.push_back(i);
    return out;
}

std::vector<Component> components_of(const RootData& rd, RootMask m) {
    std::vector<int> simple = simple_roots_of(rd, m);
    std::set<Rational> ambient_norms;
    for (std::size_t i = 0; i < rd.roots.size(); ++i) ambient_norms.insert(rd.inner(static_cast<int>(i), static_cast<int>(i)));

    std::vector<int> comp_of(simple.size(), -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < simple.size(); ++s) {
        if (comp_of[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp_of[s] = ncomp;
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < simple.size(); ++b)
                if (comp_of[b] < 0 && !rd.inner(simple[a], simple[b]).is_zero()) {
                    comp_of[b] = ncomp;
                    stack.push_back(b);
                }
        }
        ++ncomp;
    }

    std::vector<Component> comps;
    for (int c = 0; c < ncomp; ++c) {
        Component comp;
        for (std::size_t s = 0; s < simple.size(); ++s)
            if (comp_of[s] == c) comp.simple.push_back(simple[s]);
        comp.rank = static_cast<int>(comp.simple.size());
        std::vector<int> members;
        for (RootMask a = m; a; a &= a - 1) {
            int i = std::countr_zero(a);
            for (int s : comp.simple)
                if (!rd.inner(i, s).is_zero()) {
                    members.push_back(i);
                    break;
                }
        }
        long r = comp.rank, n = static_cast<long>(members.size());
        std::set<Rational> norms;
        bool nonreduced = false;
        for (int i : members) {
            norms.insert(rd.inner(i, i));
            Root dbl = rd.roots[i];
            for (auto& x : dbl) x *= 2;
            int j = rd.find(dbl);
            if (j >= 0 && std::find(members.begin(), members.end(), j) != members.end()) nonreduced = true;
        }
        std::string type;
        if (nonreduced) {
            comp.letter = 'X';
            type = "BC" + std::to_string(r);
        } else if (norms.size() == 1) {
            if (n == r * (r + 1)) comp.letter = 'A';
            else if (r >= 4 && n == 2 * r * (r - 1)) comp.letter = 'D';
            else if ((r == 6 && n == 72) || (r == 7 && n == 126) || (r == 8 && n == 240)) comp.letter = 'E';
            else throw InternalError("unrecognized simply-laced component");
            type = std::string(1, comp.letter) + std::to_string(r);
            Rational nm = *norms.begin();
            for (const auto& an : ambient_norms)
                if (an > nm) type += "~";
        } else if (norms.size() == 2) {
            Rational lo = *norms.begin(), hi = *norms.rbegin();
            Rational ratio = hi / lo;
            long shorts = 0;
            for (int i : members)
                if (rd.inner(i, i) == lo) ++shorts;
            if (ratio == Rational(3) && r == 2) comp.letter = 'G';
            else if (ratio == Rational(2) && r == 4 && n == 48) comp.letter = 'F';
            else if (ratio == Rational(2) && shorts == 2 * r) comp.letter = 'B';
            else if (ratio == Rational(2) && n - shorts == 2 * r) comp.letter = 'C';
            else throw InternalError("unrecognized doubly-laced component");
            type = std::string(1, comp.letter) + std::to_string(r);
        } else {
            throw InternalError("component with more than two root lengths");
        }
        comp.type = type;
        if (comp.letter == 'A') {
            std::vector<int> deg(comp.simple.size(), 0);
            for (std::size_t a = 0; a < comp.simple.size(); ++a)
                for (std::size_t b = 0; b < comp.simple.size(); ++b)
                    if (a != b && !rd.inner(comp.simple[a], comp.simple[b]).is_zero()) ++deg[a];
            std::size_t cur = 0;
            while (deg[cur] > 1) ++cur;
            std::vector<bool> used(comp.simple.size(), false);
            for (;;) {
                used[cur] = true;
                comp.chain.push_back(comp.simple[cur]);
                std::size_t next = comp.simple.size();
                for (std::size_t b = 0; b < comp.simple.size(); ++b)
                    if (!used[b] && !rd.inner(comp.simple[cur], comp.simple[b]).is_zero()) next = b;
                if (next == comp.simple.size()) break;
                cur = next;
            }
        }
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
        if (a.type != b.type) return a.type < b.type;
        return a.simple.front() < b.simple.front();
    });
    return comps;
}

std::string component_label(const std::vector<Component>& comps) {
    if (comps.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < comps.size(); ++i) s += (i ? "x" : "") + comps[i].type;
    return s;
}

std::vector<ClassInfo> classify(const RootData& rd, Exec exec) {
    std::vector<ClassInfo> out;
    for (RootMask m : closed_symmetric_subsets(rd, exec)) {
        ClassInfo c;
        c.mask = m;
        c.saturation = saturation(rd, m);
        c.saturated = c.saturation == m;
        c.rank = span_rank(rd, m);
        c.size = std::popcount(m);
        c.components = components_of(rd, m);
        c.label = component_label(c.components);
        std::vector<RootMask> comp_masks;
        for (const auto& comp : c.components) {
            RootMask cm = 0;
            for (RootMask a = m; a; a &= a - 1) {
                int i = std::countr_zero(a);
                for (int s : comp.simple)
                    if (!rd.inner(i, s).is_zero()) {
                        cm |= RootMask(1) << i;
                        break;
                    }
            }
            comp_masks.push_back(cm);
        }
        std::set<std::vector<int>> syms;
        for (std::size_t w = 0; w < rd.weyl.size(); ++w) {
            if (rd.apply(w, m) != m) continue;
            std::vector<int> perm;
            for (const auto& comp : c.components) {
                int img = rd.weyl[w][comp.simple.front()];
                int target = -1;
                for (std::size_t k = 0; k < comp_masks.size(); ++k)
                    if (comp_masks[k] >> img & 1) target = static_cast<int>(k);
                perm.push_back(target);
            }
            syms.insert(perm);
        }
        c.component_symmetries.assign(syms.begin(), syms.end());
        out.push_back(std::move(c));
    }
    std::map<std::string, int> count;
    for (const auto& c : out) ++count[c.label];
    std::map<std::string, int> seen;
    for (auto& c : out)
        if (count[c.label] > 1) c.label += "#" + std::to_string(++seen[c.label]);
    return out;
}

bool conjugate_subset(const RootData& rd, RootMask sub, RootMask sup) {
    for (std::size_t w = 0; w < rd.weyl.size(); ++w)
        if ((rd.apply(w, sub) & ~sup) == 0) return true;
    return false;
}

QVector generic_point(const RootData& rd, RootMask m) {
    std::vector<QVector> constraints;
    for (std::size_t i = 0; i < rd.num_positive; ++i)
        if (m >> i & 1) constraints.push_back(rd.functionals[i]);
    RowSpace rs = row_space(constraints, rd.torus_dim);
    for (std::size_t i = 0; i < rd.num_positive; ++i)
        if (!(m >> i & 1) && in_row_span(rs.rows, rs.pivots, rd.functionals[i]))
            throw NotSaturatedError("closed subset is not saturated: some root outside it vanishes wherever it vanishes",
                                    saturation(rd, m));
    std::vector<QVector> kernel;
    if (constraints.empty()) {
        for (std::size_t k = 0; k < rd.torus_dim; ++k) {
            QVector e(rd.torus_dim);
            e[k] = 1;
            kernel.push_back(e);
        }
    } else {
        kernel = kernel_basis(QMatrix::from_rows(constraints, rd.torus_dim));
    }
    QVector point(rd.torus_dim);
    // Moment curve sum_i t^i v_i: each root outside m vanishes for finitely many t.
    for (long t = 1;; ++t) {
        point.assign(rd.torus_dim, Rational(0));
        Rational pw = 1;
        for (const auto& v : kernel) {
            point = point + scale(v, pw);
            pw *= Rational(t);
        }
        bool ok = true;
        for (std::size_t i = 0; i < rd.num_positive && ok; ++i) {
            if (m >> i & 1) continue;
            Rational val;
            for (std::size_t k = 0; k < rd.torus_dim; ++k) val += rd.functionals[i][k] * point[k];
            if (val.is_zero()) ok = false;
        }
        if (ok) break;
        if (t > static_cast<long>(rd.roots.size() * (kernel.size() + 1) + 2))
            throw InternalError("generic point search failed");
    }
    mpz_class l = 1, g = 0;
    for (const auto& x : point) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    for (auto& x : point) {
        x *= Rational(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.num().get_mpz_t());
    }
    if (g > 1)
        for (auto& x : point) x /= Rational(g);
    return point;
}

std::vector<OrbitTuple> type_a_orbits(const ClassInfo& c) {
    for (const auto& comp : c.components)
        if (comp.letter != 'A')
            throw UnsupportedError("nilpotent orbits of a " + comp.type + " factor require supplied nilpotent data");
    std::vector<std::vector<Partition>> choices;
    for (const auto& comp : c.components) choices.push_back(partitions(comp.rank + 1));
    std::set<std::vector<Partition>> canon;
    std::vector<Partition> cur(c.components.size());
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cur.size()) {
            std::vector<Partition> best = cur;
            for (const auto& perm : c.component_symmetries) {
                std::vector<Partition> img(cur.size());
                for (std::size_t i = 0; i < cur.size(); ++i) img[perm[i]] = cur[i];
                best = std::min(best, img);
            }
            canon.insert(best);
            return;
        }
        for (const auto& p : choices[k]) {
            cur[k] = p;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    std::vector<OrbitTuple> out;
    for (const auto& t : canon) {
        OrbitTuple o;
        o.parts = t;
        o.distinguished = true;
        for (std::size_t i = 0; i < t.size(); ++i) {
            o.label += (i ? "x" : "") + t[i].to_string();
            if (t[i].parts.size() != 1) o.distinguished = false;
        }
        if (t.empty()) o.label = "0";
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace hk
