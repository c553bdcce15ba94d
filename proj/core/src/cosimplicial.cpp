#include "sseq/cosimplicial.hpp"

#include <functional>
#include <stdexcept>

namespace sseq {

namespace {

std::string ids(int a, int b) { return "[" + std::to_string(a) + "][" + std::to_string(b) + "]"; }

}  // namespace

CosimplicialAbGroup CosimplicialAbGroup::unchecked(int top, std::vector<int> ranks,
                                                   std::vector<std::vector<IntMatrix>> coface,
                                                   std::vector<std::vector<IntMatrix>> codeg) {
    CosimplicialAbGroup c;
    c.top_ = top;
    c.ranks_ = std::move(ranks);
    c.coface_ = std::move(coface);
    c.codeg_ = std::move(codeg);
    return c;
}

CosimplicialAbGroup::CosimplicialAbGroup(int top, std::vector<int> ranks, std::vector<std::vector<IntMatrix>> coface,
                                         std::vector<std::vector<IntMatrix>> codeg) {
    *this = unchecked(top, std::move(ranks), std::move(coface), std::move(codeg));
    ValidationReport rep = validate_cosimplicial(*this);
    if (!rep.ok()) throw std::invalid_argument("CosimplicialAbGroup: " + rep.violations.front());
}

ValidationReport validate_cosimplicial(const CosimplicialAbGroup& c) {
    ValidationReport rep;
    int top = c.top();
    // shapes
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i <= n; ++i)
            if (c.coface(n, i).cols() != c.rank(n - 1) || c.coface(n, i).rows() != c.rank(n))
                rep.violations.push_back("coface shape mismatch at " + ids(n, i));
    for (int n = 0; n < top; ++n)
        for (int i = 0; i <= n; ++i)
            if (c.codeg(n, i).cols() != c.rank(n + 1) || c.codeg(n, i).rows() != c.rank(n))
                rep.violations.push_back("codeg shape mismatch at " + ids(n, i));
    if (!rep.ok()) return rep;
    // d^j d^i = d^i d^{j-1} for i < j
    for (int n = 2; n <= top; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (!(c.coface(n, j) * c.coface(n - 1, i) - c.coface(n, i) * c.coface(n - 1, j - 1)).is_zero())
                    rep.violations.push_back("coface identity d" + ids(n, j) + "∘d" + ids(n - 1, i) + " fails");
    // s^i s^j = s^{j-1} s^i for i < j
    for (int n = 0; n + 2 <= top; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n + 1; ++j)
                if (!(c.codeg(n, i) * c.codeg(n + 1, j) - c.codeg(n, j - 1) * c.codeg(n + 1, i)).is_zero())
                    rep.violations.push_back("codeg identity s" + ids(n, i) + "∘s" + ids(n + 1, j) + " fails");
    // s^j d^i mixed identities
    for (int n = 0; n + 1 <= top; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                IntMatrix lhs = c.codeg(n, j) * c.coface(n + 1, i);
                IntMatrix rhs = (i == j || i == j + 1) ? IntMatrix::identity(c.rank(n))
                                : (i < j)              ? c.coface(n, i) * c.codeg(n - 1, j - 1)
                                                       : c.coface(n, i - 1) * c.codeg(n - 1, j);
                if (!(lhs - rhs).is_zero())
                    rep.violations.push_back("mixed identity s" + ids(n, j) + "∘d" + ids(n + 1, i) + " fails");
            }
    return rep;
}

namespace {

IntMatrix alternating_coface(const CosimplicialAbGroup& c, int n) {
    IntMatrix alt(c.rank(n + 1), c.rank(n));
    for (int i = 0; i <= n + 1; ++i) alt = alt + (i % 2 == 0 ? c.coface(n + 1, i) : -c.coface(n + 1, i));
    return alt;
}

Lattice normalized_lattice(const std::function<IntMatrix(int)>& codeg, int count, int ambient) {
    Lattice l = Lattice::full(ambient);
    for (int i = 0; i < count; ++i) l = lattice_intersect(l, kernel_lattice(codeg(i)));
    return l;
}

}  // namespace

CochainComplex normalized_complex(const CosimplicialAbGroup& c) {
    int top = c.top();
    std::vector<IntMatrix> bases;
    for (int n = 0; n <= top; ++n)
        bases.push_back(
            normalized_lattice([&](int i) { return c.codeg(n - 1, i); }, n == 0 ? 0 : n, c.rank(n)).basis());
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int n = 0; n <= top; ++n) {
        ranks.push_back(bases[n].cols());
        if (n == top) {
            diffs.push_back(IntMatrix(0, bases[n].cols()));
        } else {
            auto x = solve_columns(bases[n + 1], alternating_coface(c, n) * bases[n]);
            if (!x) throw std::logic_error("normalized_complex: alternating sum leaves the normalized subgroup");
            diffs.push_back(*x);
        }
    }
    return CochainComplex(0, top, std::move(ranks), std::move(diffs));
}

CochainComplex moore_complex(const CosimplicialAbGroup& c) {
    int top = c.top();
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int n = 0; n <= top; ++n) {
        ranks.push_back(c.rank(n));
        diffs.push_back(n == top ? IntMatrix(0, c.rank(n)) : alternating_coface(c, n));
    }
    return CochainComplex(0, top, std::move(ranks), std::move(diffs));
}

CosimplicialComplex CosimplicialComplex::unchecked(int top, std::vector<CochainComplex> levels,
                                                   std::vector<std::vector<ChainMap>> coface,
                                                   std::vector<std::vector<ChainMap>> codeg) {
    CosimplicialComplex c;
    c.top_ = top;
    c.levels_ = std::move(levels);
    c.coface_ = std::move(coface);
    c.codeg_ = std::move(codeg);
    return c;
}

CosimplicialComplex::CosimplicialComplex(int top, std::vector<CochainComplex> levels,
                                         std::vector<std::vector<ChainMap>> coface,
                                         std::vector<std::vector<ChainMap>> codeg) {
    *this = unchecked(top, std::move(levels), std::move(coface), std::move(codeg));
    ValidationReport rep = validate_cosimplicial(*this);
    if (!rep.ok()) throw std::invalid_argument("CosimplicialComplex: " + rep.violations.front());
}

ValidationReport validate_cosimplicial(const CosimplicialComplex& c) {
    ValidationReport rep;
    int top = c.top();
    for (int n = 1; n <= top; ++n)
        if (c.level(n).lo() != c.level(0).lo() || c.level(n).hi() != c.level(0).hi())
            rep.violations.push_back("level " + std::to_string(n) + " support range differs from level 0");
    if (!rep.ok()) return rep;
    int lo = c.level(0).lo(), hi = c.level(0).hi();
    // reduce to the groupwise identities one internal degree at a time
    for (int b = lo; b <= hi; ++b) {
        std::vector<int> ranks;
        std::vector<std::vector<IntMatrix>> coface(top + 1), codeg(top);
        for (int n = 0; n <= top; ++n) {
            ranks.push_back(c.level(n).rank(b));
            if (n >= 1)
                for (int i = 0; i <= n; ++i) coface[n].push_back(c.coface(n, i).f(b));
            if (n < top)
                for (int i = 0; i <= n; ++i) codeg[n].push_back(c.codeg(n, i).f(b));
        }
        ValidationReport sub = validate_cosimplicial(
            CosimplicialAbGroup::unchecked(top, std::move(ranks), std::move(coface), std::move(codeg)));
        for (const std::string& v : sub.violations)
            rep.violations.push_back(v + " (internal degree " + std::to_string(b) + ")");
    }
    return rep;
}

CosimplicialComplex to_complexes(const CosimplicialAbGroup& c) {
    int top = c.top();
    std::vector<CochainComplex> levels;
    for (int n = 0; n <= top; ++n) levels.push_back(CochainComplex(0, 0, {c.rank(n)}, {IntMatrix(0, c.rank(n))}));
    std::vector<std::vector<ChainMap>> coface(top + 1), codeg(top);
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i <= n; ++i)
            coface[n].push_back(make_chain_map(levels[n - 1], levels[n], {c.coface(n, i)}, 0));
    for (int n = 0; n < top; ++n)
        for (int i = 0; i <= n; ++i)
            codeg[n].push_back(make_chain_map(levels[n + 1], levels[n], {c.codeg(n, i)}, 0));
    return CosimplicialComplex(top, std::move(levels), std::move(coface), std::move(codeg));
}

NormalizedDouble to_double_with_bases(const CosimplicialComplex& cc) {
    int top = cc.top();
    int lo = cc.level(0).lo(), hi = cc.level(0).hi();
    std::vector<std::vector<IntMatrix>> basis(top + 1);
    std::vector<std::vector<int>> ranks(top + 1);
    for (int a = 0; a <= top; ++a)
        for (int b = lo; b <= hi; ++b) {
            Lattice l = normalized_lattice([&](int i) { return cc.codeg(a - 1, i).f(b); }, a == 0 ? 0 : a,
                                           cc.level(a).rank(b));
            basis[a].push_back(l.basis());
            ranks[a].push_back(l.rank());
        }
    auto solve_into = [&](int a, int b, const IntMatrix& m) {
        auto x = solve_columns(basis[a][b - lo], m);
        if (!x) throw std::logic_error("to_double: map leaves the normalized subgroup");
        return *x;
    };
    std::vector<std::vector<IntMatrix>> d1(top + 1), d2(top + 1);
    for (int a = 0; a <= top; ++a)
        for (int b = lo; b <= hi; ++b) {
            const IntMatrix& k = basis[a][b - lo];
            if (a == top) {
                d1[a].push_back(IntMatrix(0, k.cols()));
            } else {
                IntMatrix alt(cc.level(a + 1).rank(b), cc.level(a).rank(b));
                for (int i = 0; i <= a + 1; ++i) {
                    const IntMatrix& fi = cc.coface(a + 1, i).f(b);
                    alt = alt + (i % 2 == 0 ? fi : -fi);
                }
                d1[a].push_back(solve_into(a + 1, b, alt * k));
            }
            if (b == hi)
                d2[a].push_back(IntMatrix(0, k.cols()));
            else
                d2[a].push_back(solve_into(a, b + 1, cc.level(a).d(b) * k));
        }
    return NormalizedDouble{DoubleComplex(top, lo, hi, std::move(ranks), std::move(d1), std::move(d2)),
                            std::move(basis)};
}

DoubleComplex to_double(const CosimplicialComplex& cc) { return to_double_with_bases(cc).dc; }

DoubleComplex truncate_columns(const DoubleComplex& k, int n) {
    if (n < 0 || n > k.amax()) throw std::invalid_argument("truncate_columns: column index out of range");
    std::vector<std::vector<int>> ranks(n + 1);
    std::vector<std::vector<IntMatrix>> d1(n + 1), d2(n + 1);
    for (int a = 0; a <= n; ++a)
        for (int b = k.bmin(); b <= k.bmax(); ++b) {
            ranks[a].push_back(k.rank(a, b));
            d1[a].push_back(a == n ? IntMatrix(0, k.rank(a, b)) : k.d1(a, b));
            d2[a].push_back(k.d2(a, b));
        }
    return DoubleComplex(n, k.bmin(), k.bmax(), std::move(ranks), std::move(d1), std::move(d2));
}

FilteredComplex tot_truncated(const CosimplicialComplex& cc, int n) {
    if (n < 0 || n > cc.top()) throw std::invalid_argument("tot_truncated: n out of range");
    return stupid_filtration(truncate_columns(to_double(cc), n));
}

CochainComplex tot_layer(const CosimplicialComplex& cc, int n) {
    if (n < 0 || n > cc.top()) throw std::invalid_argument("tot_layer: n out of range");
    DoubleComplex k = to_double(cc);
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int b = k.bmin(); b <= k.bmax(); ++b) {
        ranks.push_back(k.rank(n, b));
        diffs.push_back(k.d2(n, b));
    }
    return shift(CochainComplex(k.bmin(), k.bmax(), std::move(ranks), std::move(diffs)), -n);
}

CosimplicialComplex termwise_truncation(const CosimplicialComplex& cc, int m) {
    int top = cc.top();
    std::vector<Truncation> trunc;
    for (int n = 0; n <= top; ++n) trunc.push_back(canonical_truncation(cc.level(n), -m));
    auto restrict_map = [&](const ChainMap& f, int dom, int cod) {
        std::vector<IntMatrix> maps;
        const CochainComplex& dc = trunc[dom].complex;
        for (int b = dc.lo(); b <= dc.hi(); ++b) {
            auto x = solve_columns(trunc[cod].inclusion.f(b), f.f(b) * trunc[dom].inclusion.f(b));
            if (!x) throw std::logic_error("termwise_truncation: structure map does not restrict");
            maps.push_back(*x);
        }
        return make_chain_map(trunc[dom].complex, trunc[cod].complex, std::move(maps), dc.lo());
    };
    std::vector<std::vector<ChainMap>> coface(top + 1), codeg(top);
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i <= n; ++i) coface[n].push_back(restrict_map(cc.coface(n, i), n - 1, n));
    for (int n = 0; n < top; ++n)
        for (int i = 0; i <= n; ++i) codeg[n].push_back(restrict_map(cc.codeg(n, i), n + 1, n));
    std::vector<CochainComplex> levels;
    for (auto& t : trunc) levels.push_back(t.complex);
    return CosimplicialComplex(top, std::move(levels), std::move(coface), std::move(codeg));
}

FiniteGroup make_group(std::vector<std::vector<int>> mult) {
    FiniteGroup g{std::move(mult)};
    int n = g.order();
    if (n == 0) throw std::invalid_argument("group: empty multiplication table");
    for (const auto& row : g.mult) {
        if ((int)row.size() != n) throw std::invalid_argument("group: table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("group: table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (g.op(0, a) != a || g.op(a, 0) != a)
            throw std::invalid_argument("group: element 0 is not an identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                    throw std::invalid_argument("group: associativity fails");
    for (int a = 0; a < n; ++a) {
        bool inv = false;
        for (int b = 0; b < n && !inv; ++b) inv = g.op(a, b) == 0 && g.op(b, a) == 0;
        if (!inv) throw std::invalid_argument("group: missing inverse");
    }
    return g;
}

FiniteGroup cyclic_group(int m) {
    if (m < 1) throw std::invalid_argument("cyclic_group: order must be positive");
    std::vector<std::vector<int>> mult(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) mult[a][b] = (a + b) % m;
    return make_group(std::move(mult));
}

FiniteGroup product_group(const FiniteGroup& g, const FiniteGroup& h) {
    int n = g.order(), m = h.order();
    std::vector<std::vector<int>> mult(n * m, std::vector<int>(n * m));
    for (int a = 0; a < n * m; ++a)
        for (int b = 0; b < n * m; ++b)
            mult[a][b] = g.op(a / m, b / m) * m + h.op(a % m, b % m);
    return make_group(std::move(mult));
}

namespace {

int tuple_index(const std::vector<int>& t, int order) {
    int idx = 0;
    for (int k = (int)t.size() - 1; k >= 0; --k) idx = idx * order + t[k];
    return idx;
}

void for_each_tuple(int len, int order, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> t(len, 0);
    while (true) {
        fn(t);
        int k = 0;
        while (k < len && ++t[k] == order) t[k++] = 0;
        if (k == len) break;
    }
}

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// Matrix of precomposition with phi: G^m -> G^k on Map(G^k, Z^c) -> Map(G^m, Z^c).
IntMatrix precompose(const FiniteGroup& g, int m, int k,
                     const std::function<std::vector<int>(const std::vector<int>&)>& phi, int c) {
    IntMatrix res(ipow(g.order(), m) * c, ipow(g.order(), k) * c);
    for_each_tuple(m, g.order(), [&](const std::vector<int>& u) {
        int row = tuple_index(u, g.order());
        int col = tuple_index(phi(u), g.order());
        for (int ci = 0; ci < c; ++ci) res.at(row * c + ci, col * c + ci) = 1;
    });
    return res;
}

std::vector<int> face_map(const FiniteGroup& g, const std::vector<int>& u, int i) {
    int n = (int)u.size();
    std::vector<int> v;
    for (int k = 0; k < n; ++k) {
        if (i >= 1 && i <= n - 1 && k == i - 1) {
            v.push_back(g.op(u[k], u[k + 1]));
            ++k;
        } else if (i == 0 && k == 0) {
            // drop u[0]
        } else if (i == n && k == n - 1) {
            // drop u[n-1]
        } else {
            v.push_back(u[k]);
        }
    }
    return v;
}

std::vector<int> degeneracy_map(const std::vector<int>& u, int i) {
    std::vector<int> v = u;
    v.insert(v.begin() + i, 0);
    return v;
}

}  // namespace

CosimplicialAbGroup bar_cosimplicial(const FiniteGroup& g, int coeff_rank, int top) {
    if (coeff_rank < 0 || top < 0) throw std::invalid_argument("bar_cosimplicial: bad parameters");
    std::vector<int> ranks;
    for (int n = 0; n <= top; ++n) ranks.push_back(ipow(g.order(), n) * coeff_rank);
    std::vector<std::vector<IntMatrix>> coface(top + 1), codeg(top);
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i <= n; ++i)
            coface[n].push_back(
                precompose(g, n, n - 1, [&](const std::vector<int>& u) { return face_map(g, u, i); }, coeff_rank));
    for (int n = 0; n < top; ++n)
        for (int i = 0; i <= n; ++i)
            codeg[n].push_back(
                precompose(g, n, n + 1, [&](const std::vector<int>& u) { return degeneracy_map(u, i); },
                           coeff_rank));
    // validity is structural (precomposition is functorial); checked in tests at small top
    return CosimplicialAbGroup::unchecked(top, std::move(ranks), std::move(coface), std::move(codeg));
}

CosimplicialComplex bar_cosimplicial_coeff(const FiniteGroup& g, const InvariantFactors& a, int top) {
    int r = a.free_rank, t = (int)a.torsion.size();
    std::vector<CochainComplex> levels;
    CosimplicialAbGroup low = bar_cosimplicial(g, t, top);
    CosimplicialAbGroup high = bar_cosimplicial(g, r + t, top);
    for (int n = 0; n <= top; ++n) {
        int tuples = ipow(g.order(), n);
        IntMatrix d(tuples * (r + t), tuples * t);
        for (int u = 0; u < tuples; ++u)
            for (int k = 0; k < t; ++k) d.at(u * (r + t) + r + k, u * t + k) = a.torsion[k];
        levels.push_back(CochainComplex(-1, 0, {tuples * t, tuples * (r + t)},
                                        {std::move(d), IntMatrix(0, tuples * (r + t))}));
    }
    std::vector<std::vector<ChainMap>> coface(top + 1), codeg(top);
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i <= n; ++i)
            coface[n].push_back(ChainMap{levels[n - 1], levels[n], {low.coface(n, i), high.coface(n, i)}, -1});
    for (int n = 0; n < top; ++n)
        for (int i = 0; i <= n; ++i)
            codeg[n].push_back(ChainMap{levels[n + 1], levels[n], {low.codeg(n, i), high.codeg(n, i)}, -1});
    // validity follows from the underlying bar object; checked in tests at small top
    return CosimplicialComplex::unchecked(top, std::move(levels), std::move(coface), std::move(codeg));
}

}  // namespace sseq
