#include <random>

#include "sseq/decalage.hpp"

namespace sseq {

namespace {

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi) { return lo + (int)(rng() % (std::uint64_t)(hi - lo + 1)); }

// random unimodular matrix: identity stirred by a few elementary operations
IntMatrix random_unimodular(Rng& rng, int n, int ops) {
    IntMatrix u = IntMatrix::identity(n);
    for (int k = 0; k < ops && n >= 2; ++k) {
        int i = rand_int(rng, 0, n - 1), j = rand_int(rng, 0, n - 1);
        switch (rand_int(rng, 0, 2)) {
            case 0:
                if (i != j) u.addmul_col(i, j, rand_int(rng, -1, 1));
                break;
            case 1:
                u.swap_cols(i, j);
                break;
            default:
                u.negate_col(i);
        }
    }
    return u;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
    auto inv = solve_columns(u, IntMatrix::identity(u.rows()));
    if (!inv) throw std::logic_error("inverse_unimodular: matrix is not invertible over Z");
    return *inv;
}

struct Grid {
    int amax, bmax;
    std::vector<std::vector<int>> ranks;
    std::vector<std::vector<IntMatrix>> d1, d2;

    Grid(int amax_, int bmax_) : amax(amax_), bmax(bmax_) {
        ranks.assign(amax + 1, std::vector<int>(bmax + 1, 0));
    }

    // append a rank-1 summand at (a,b); returns its index within the block
    int add(int a, int b) { return ranks[a][b]++; }
};

}  // namespace

DoubleComplex random_double_complex(std::uint64_t seed, const SizeParams& sp) {
    Rng rng(seed);
    int amax = std::max(0, sp.columns - 1);
    int bmax = std::max(0, sp.brange - 1);
    Grid g(amax, bmax);
    struct Entry {
        int a, b, src, dst;
        Int c;
        bool horizontal;
    };
    std::vector<Entry> arrows;
    int summands = rand_int(rng, 0, sp.max_rank * 2 + 2);
    for (int s = 0; s < summands; ++s) {
        int kind = rand_int(rng, 0, 3);
        int a = rand_int(rng, 0, amax), b = rand_int(rng, 0, bmax);
        if (kind == 0) {
            g.add(a, b);
        } else if (kind == 1 && a < amax) {  // horizontal strip Z --×m--> Z
            int i = g.add(a, b), j = g.add(a + 1, b);
            arrows.push_back({a, b, i, j, Int(rand_int(rng, -sp.max_entry, sp.max_entry)), true});
        } else if (kind == 2 && b < bmax) {  // vertical strip
            int i = g.add(a, b), j = g.add(a, b + 1);
            arrows.push_back({a, b, i, j, Int(rand_int(rng, -sp.max_entry, sp.max_entry)), false});
        } else if (kind == 3 && a < amax && b < bmax) {  // commuting square of identities
            int i00 = g.add(a, b), i10 = g.add(a + 1, b), i01 = g.add(a, b + 1), i11 = g.add(a + 1, b + 1);
            arrows.push_back({a, b, i00, i10, Int(1), true});
            arrows.push_back({a, b + 1, i01, i11, Int(1), true});
            arrows.push_back({a, b, i00, i01, Int(1), false});
            arrows.push_back({a + 1, b, i10, i11, Int(1), false});
        }
    }
    std::vector<std::vector<IntMatrix>> d1(amax + 1), d2(amax + 1);
    for (int a = 0; a <= amax; ++a)
        for (int b = 0; b <= bmax; ++b) {
            d1[a].push_back(IntMatrix(a < amax ? g.ranks[a + 1][b] : 0, g.ranks[a][b]));
            d2[a].push_back(IntMatrix(b < bmax ? g.ranks[a][b + 1] : 0, g.ranks[a][b]));
        }
    for (const Entry& e : arrows) {
        if (e.horizontal)
            d1[e.a][e.b].at(e.dst, e.src) = e.c;
        else
            d2[e.a][e.b].at(e.dst, e.src) = e.c;
    }
    // per-bidegree unimodular basis changes
    std::vector<std::vector<IntMatrix>> v(amax + 1), vinv(amax + 1);
    for (int a = 0; a <= amax; ++a)
        for (int b = 0; b <= bmax; ++b) {
            IntMatrix u = random_unimodular(rng, g.ranks[a][b], 2 * g.ranks[a][b]);
            v[a].push_back(u);
            vinv[a].push_back(inverse_unimodular(u));
        }
    for (int a = 0; a <= amax; ++a)
        for (int b = 0; b <= bmax; ++b) {
            if (a < amax) d1[a][b] = v[a + 1][b] * d1[a][b] * vinv[a][b];
            if (b < bmax) d2[a][b] = v[a][b + 1] * d2[a][b] * vinv[a][b];
        }
    return DoubleComplex(amax, 0, bmax, g.ranks, std::move(d1), std::move(d2));
}

FilteredComplex random_filtered_instance(std::uint64_t seed, const SizeParams& sp) {
    DoubleComplex k = random_double_complex(seed, sp);
    FilteredComplex base = stupid_filtration(k);
    const CochainComplex& tot = base.complex();
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    // filtration-respecting shear: unipotent U sending block a into blocks ≥ a,
    // new differential U d U^{-1}; the coordinate filtration stays valid
    std::vector<IntMatrix> u, uinv;
    for (int n = tot.lo(); n <= tot.hi(); ++n) {
        IntMatrix m = IntMatrix::identity(tot.rank(n));
        for (int a = 0; a <= k.amax(); ++a) {
            int b = n - a;
            for (int a2 = a + 1; a2 <= k.amax(); ++a2) {
                int b2 = n - a2;
                for (int i = 0; i < k.rank(a2, b2); ++i)
                    for (int j = 0; j < k.rank(a, b); ++j)
                        if (rand_int(rng, 0, 2) == 0)
                            m.at(k.tot_offset(n, a2) + i, k.tot_offset(n, a) + j) =
                                rand_int(rng, -sp.max_entry, sp.max_entry);
            }
        }
        uinv.push_back(inverse_unimodular(m));
        u.push_back(std::move(m));
    }
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int n = tot.lo(); n <= tot.hi(); ++n) {
        ranks.push_back(tot.rank(n));
        IntMatrix d = tot.d(n) * uinv[n - tot.lo()];
        if (n < tot.hi()) d = u[n + 1 - tot.lo()] * d;
        diffs.push_back(std::move(d));
    }
    CochainComplex sheared(tot.lo(), tot.hi(), std::move(ranks), std::move(diffs));
    std::vector<std::vector<Lattice>> filt;
    for (int p = base.pmin(); p <= base.pmax(); ++p) {
        std::vector<Lattice> row;
        for (int n = tot.lo(); n <= tot.hi(); ++n) row.push_back(base.filt(p, n));
        filt.push_back(std::move(row));
    }
    return FilteredComplex(std::move(sheared), base.pmin(), base.pmax(), std::move(filt));
}

namespace {

CosimplicialComplex constant_cosimplicial(const CochainComplex& c, int top) {
    std::vector<CochainComplex> levels(top + 1, c);
    ChainMap id = identity_chain_map(c);
    std::vector<std::vector<ChainMap>> coface(top + 1), codeg(top);
    for (int n = 1; n <= top; ++n) coface[n].assign(n + 1, id);
    for (int n = 0; n < top; ++n) codeg[n].assign(n + 1, id);
    return CosimplicialComplex(top, std::move(levels), std::move(coface), std::move(codeg));
}

CosimplicialComplex pad_support(const CosimplicialComplex& cc, int lo, int hi) {
    if (cc.level(0).lo() == lo && cc.level(0).hi() == hi) return cc;
    int top = cc.top();
    std::vector<CochainComplex> levels;
    for (int n = 0; n <= top; ++n) {
        std::vector<int> ranks;
        std::vector<IntMatrix> diffs;
        for (int b = lo; b <= hi; ++b) {
            ranks.push_back(cc.level(n).rank(b));
            diffs.push_back(cc.level(n).d(b));
        }
        levels.push_back(CochainComplex(lo, hi, std::move(ranks), std::move(diffs)));
    }
    auto pad_map = [&](const ChainMap& f, int dom, int cod) {
        std::vector<IntMatrix> maps;
        for (int b = lo; b <= hi; ++b) maps.push_back(f.f(b));
        return make_chain_map(levels[dom], levels[cod], std::move(maps), lo);
    };
    std::vector<std::vector<ChainMap>> coface(top + 1), codeg(top);
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i <= n; ++i) coface[n].push_back(pad_map(cc.coface(n, i), n - 1, n));
    for (int n = 0; n < top; ++n)
        for (int i = 0; i <= n; ++i) codeg[n].push_back(pad_map(cc.codeg(n, i), n + 1, n));
    return CosimplicialComplex(top, std::move(levels), std::move(coface), std::move(codeg));
}

CosimplicialComplex direct_sum(const CosimplicialComplex& x, const CosimplicialComplex& y) {
    int top = x.top();
    int lo = std::min(x.level(0).lo(), y.level(0).lo());
    int hi = std::max(x.level(0).hi(), y.level(0).hi());
    CosimplicialComplex a = pad_support(x, lo, hi), b = pad_support(y, lo, hi);
    std::vector<CochainComplex> levels;
    for (int n = 0; n <= top; ++n) {
        std::vector<int> ranks;
        std::vector<IntMatrix> diffs;
        for (int deg = lo; deg <= hi; ++deg) {
            int ra = a.level(n).rank(deg), rb = b.level(n).rank(deg);
            ranks.push_back(ra + rb);
            IntMatrix d(a.level(n).rank(deg + 1) + b.level(n).rank(deg + 1), ra + rb);
            d.paste(0, 0, a.level(n).d(deg));
            d.paste(a.level(n).rank(deg + 1), ra, b.level(n).d(deg));
            diffs.push_back(std::move(d));
        }
        levels.push_back(CochainComplex(lo, hi, std::move(ranks), std::move(diffs)));
    }
    auto sum_map = [&](const ChainMap& fa, const ChainMap& fb, int dom, int cod) {
        std::vector<IntMatrix> maps;
        for (int deg = lo; deg <= hi; ++deg) {
            IntMatrix m(levels[cod].rank(deg), levels[dom].rank(deg));
            m.paste(0, 0, fa.f(deg));
            m.paste(fa.cod.rank(deg), fa.dom.rank(deg), fb.f(deg));
            maps.push_back(std::move(m));
        }
        return make_chain_map(levels[dom], levels[cod], std::move(maps), lo);
    };
    std::vector<std::vector<ChainMap>> coface(top + 1), codeg(top);
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i <= n; ++i) coface[n].push_back(sum_map(a.coface(n, i), b.coface(n, i), n - 1, n));
    for (int n = 0; n < top; ++n)
        for (int i = 0; i <= n; ++i) codeg[n].push_back(sum_map(a.codeg(n, i), b.codeg(n, i), n + 1, n));
    return CosimplicialComplex(top, std::move(levels), std::move(coface), std::move(codeg));
}

CochainComplex random_small_complex(Rng& rng) {
    // degrees [0,2], built from single Z's and ×m arrows
    std::vector<int> ranks(3, 0);
    std::vector<std::pair<std::pair<int, int>, std::pair<int, Int>>> arrows;  // ((deg, src), (dst, c))
    int pieces = rand_int(rng, 1, 3);
    for (int s = 0; s < pieces; ++s) {
        int deg = rand_int(rng, 0, 2);
        if (rand_int(rng, 0, 1) == 0 || deg == 2) {
            ranks[deg]++;
        } else {
            int i = ranks[deg]++, j = ranks[deg + 1]++;
            arrows.push_back({{deg, i}, {j, Int(rand_int(rng, -3, 3))}});
        }
    }
    std::vector<IntMatrix> diffs;
    for (int deg = 0; deg <= 2; ++deg) diffs.push_back(IntMatrix(deg < 2 ? ranks[deg + 1] : 0, ranks[deg]));
    for (const auto& [from, to] : arrows) diffs[from.first].at(to.first, from.second) = to.second;
    return CochainComplex(0, 2, std::move(ranks), std::move(diffs));
}

CosimplicialComplex conjugate(const CosimplicialComplex& cc, Rng& rng) {
    int top = cc.top();
    int lo = cc.level(0).lo(), hi = cc.level(0).hi();
    // one unimodular change of basis per (level, internal degree)
    std::vector<std::vector<IntMatrix>> w(top + 1), winv(top + 1);
    for (int n = 0; n <= top; ++n)
        for (int b = lo; b <= hi; ++b) {
            IntMatrix u = random_unimodular(rng, cc.level(n).rank(b), 6);
            w[n].push_back(u);
            winv[n].push_back(inverse_unimodular(u));
        }
    std::vector<CochainComplex> levels;
    for (int n = 0; n <= top; ++n) {
        std::vector<int> ranks;
        std::vector<IntMatrix> diffs;
        for (int b = lo; b <= hi; ++b) {
            ranks.push_back(cc.level(n).rank(b));
            IntMatrix d = cc.level(n).d(b) * winv[n][b - lo];
            if (b < hi) d = w[n][b + 1 - lo] * d;
            diffs.push_back(std::move(d));
        }
        levels.push_back(CochainComplex(lo, hi, std::move(ranks), std::move(diffs)));
    }
    auto conj_map = [&](const ChainMap& f, int dom, int cod) {
        std::vector<IntMatrix> maps;
        for (int b = lo; b <= hi; ++b) maps.push_back(w[cod][b - lo] * f.f(b) * winv[dom][b - lo]);
        return make_chain_map(levels[dom], levels[cod], std::move(maps), lo);
    };
    std::vector<std::vector<ChainMap>> coface(top + 1), codeg(top);
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i <= n; ++i) coface[n].push_back(conj_map(cc.coface(n, i), n - 1, n));
    for (int n = 0; n < top; ++n)
        for (int i = 0; i <= n; ++i) codeg[n].push_back(conj_map(cc.codeg(n, i), n + 1, n));
    return CosimplicialComplex(top, std::move(levels), std::move(coface), std::move(codeg));
}

}  // namespace

CosimplicialComplex random_cosimplicial_instance(std::uint64_t seed, int top) {
    Rng rng(seed);
    auto piece = [&]() -> CosimplicialComplex {
        switch (rand_int(rng, 0, 3)) {
            case 0:
                return constant_cosimplicial(random_small_complex(rng), top);
            case 1:
                return to_complexes(bar_cosimplicial(cyclic_group(rand_int(rng, 2, 3)), 1, top));
            case 2: {
                InvariantFactors a;
                a.torsion.push_back(Int(rand_int(rng, 2, 4)));
                return bar_cosimplicial_coeff(cyclic_group(2), a, top);
            }
            default:
                return to_complexes(bar_cosimplicial(cyclic_group(1), rand_int(rng, 1, 2), top));
        }
    };
    CosimplicialComplex cc = piece();
    int extra = rand_int(rng, 0, 1);
    for (int s = 0; s < extra; ++s) cc = direct_sum(cc, piece());
    return conjugate(cc, rng);
}

}  // namespace sseq
