#include <bit>
#include <stdexcept>

#include "sseq/cosimplicial.hpp"

namespace sseq {

PuncturedCubeDiagram::PuncturedCubeDiagram(int n, std::map<unsigned, CochainComplex> values,
                                           std::map<std::pair<unsigned, unsigned>, ChainMap> maps)
    : n_(n), values_(std::move(values)), maps_(std::move(maps)) {
    unsigned full = full_mask();
    for (unsigned i = 1; i <= full; ++i)
        if (values_.find(i) == values_.end())
            throw std::invalid_argument("PuncturedCubeDiagram: missing value for subset " + std::to_string(i));
    for (const auto& [key, f] : maps_) {
        auto [i, j] = key;
        if ((i & j) != i || i == j) throw std::invalid_argument("PuncturedCubeDiagram: bad subset pair");
        if (!(f.dom == values_.at(i)) || !(f.cod == values_.at(j)))
            throw std::invalid_argument("PuncturedCubeDiagram: map endpoints mismatch");
    }
    // functoriality: every one-step factorization of i ⊆ j agrees
    for (const auto& [key, f] : maps_) {
        auto [i, j] = key;
        if (std::popcount(j) - std::popcount(i) < 2) continue;
        for (int b = 0; b <= n_; ++b) {
            if (!((j & ~i) >> b & 1u)) continue;
            unsigned mid = i | (1u << b);
            const ChainMap& g1 = maps_.at({i, mid});
            const ChainMap& g2 = maps_.at({mid, j});
            for (int deg = f.dom.lo(); deg <= f.dom.hi(); ++deg)
                if (!(f.f(deg) - g2.f(deg) * g1.f(deg)).is_zero())
                    throw std::invalid_argument("PuncturedCubeDiagram: functoriality fails for " +
                                                std::to_string(i) + " ⊆ " + std::to_string(j));
        }
    }
}

PuncturedCubeDiagram cube_from_cosimplicial(const CosimplicialComplex& cc, int n) {
    if (n < 0 || n > cc.top()) throw std::invalid_argument("cube_from_cosimplicial: n out of range");
    unsigned full = (1u << (n + 1)) - 1;
    std::map<unsigned, CochainComplex> values;
    for (unsigned i = 1; i <= full; ++i) values.insert({i, cc.level(std::popcount(i) - 1)});
    std::map<std::pair<unsigned, unsigned>, ChainMap> maps;
    // edges: the subsets carry the opposite order, so adding element j maps by
    // the coface indexed by the number of larger elements already below it
    for (unsigned i = 1; i <= full; ++i)
        for (int b = 0; b <= n; ++b) {
            if (i >> b & 1u) continue;
            unsigned j = i | (1u << b);
            int pos = std::popcount(j >> (b + 1));
            maps.insert({{i, j}, cc.coface(std::popcount(j) - 1, pos)});
        }
    // longer inclusions by composing edges (descending added bit)
    for (int gap = 2; gap <= n; ++gap)
        for (unsigned i = 1; i <= full; ++i)
            for (unsigned j = i; j <= full; ++j) {
                if ((j & i) != i || std::popcount(j) - std::popcount(i) != gap) continue;
                int b = std::bit_width(j & ~i) - 1;
                unsigned mid = j & ~(1u << b);
                const ChainMap& g1 = maps.at({i, mid});
                const ChainMap& g2 = maps.at({mid, j});
                std::vector<IntMatrix> comp;
                for (int deg = g1.dom.lo(); deg <= g1.dom.hi(); ++deg) comp.push_back(g2.f(deg) * g1.f(deg));
                maps.insert({{i, j}, make_chain_map(g1.dom, g2.cod, std::move(comp), g1.dom.lo())});
            }
    return PuncturedCubeDiagram(n, std::move(values), std::move(maps));
}

CochainComplex cube_holim_direct(const PuncturedCubeDiagram& d) {
    unsigned full = d.full_mask();
    std::vector<unsigned> blocks;
    for (unsigned i = 1; i <= full; ++i) blocks.push_back(i);
    // block I contributes value(I)^{m-|I|+1} to total degree m
    auto block_rank = [&](unsigned i, int m) { return d.value(i).rank(m - std::popcount(i) + 1); };
    int lo = d.value(1).lo(), hi = d.value(1).hi() + d.n();
    auto offset = [&](unsigned i, int m) {
        int off = 0;
        for (unsigned b : blocks) {
            if (b == i) break;
            off += block_rank(b, m);
        }
        return off;
    };
    auto total_rank = [&](int m) {
        int r = 0;
        for (unsigned b : blocks) r += block_rank(b, m);
        return r;
    };
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int m = lo; m <= hi; ++m) {
        ranks.push_back(total_rank(m));
        IntMatrix dm(total_rank(m + 1), total_rank(m));
        for (unsigned i : blocks) {
            int s = std::popcount(i);
            int b = m - s + 1;  // internal degree
            if (d.value(i).rank(b) == 0) continue;
            IntMatrix internal = d.value(i).d(b);
            dm.paste(offset(i, m + 1), offset(i, m), s % 2 == 1 ? internal : -internal);
            for (int e = 0; e <= d.n(); ++e) {
                if (i >> e & 1u) continue;
                unsigned j = i | (1u << e);
                int sign = std::popcount(i & ((1u << e) - 1)) % 2 == 0 ? 1 : -1;
                IntMatrix edge = d.map(i, j).f(b);
                dm.paste(offset(j, m + 1), offset(i, m), sign == 1 ? edge : -edge);
            }
        }
        diffs.push_back(std::move(dm));
    }
    return CochainComplex(lo, hi, std::move(ranks), std::move(diffs));
}

namespace {

// punctured cube on ground bits {0..k-1}
struct Cube {
    int k;
    std::map<unsigned, CochainComplex> vals;
    std::map<std::pair<unsigned, unsigned>, ChainMap> maps;
};

ChainMap compose_chain_maps(const ChainMap& g, const ChainMap& f) {
    std::vector<IntMatrix> maps;
    for (int n = f.dom.lo(); n <= f.dom.hi(); ++n) maps.push_back(g.f(n) * f.f(n));
    return make_chain_map(f.dom, g.cod, std::move(maps), f.dom.lo());
}

// homotopy pullback of A --alpha--> C <--beta-- B:
// P^m = A^m ⊕ B^m ⊕ C^{m-1}, d(a,b,c) = (da, db, αa − βb − dc)
CochainComplex pullback(const CochainComplex& a, const CochainComplex& b, const CochainComplex& c,
                        const ChainMap& alpha, const ChainMap& beta) {
    int lo = std::min({a.lo(), b.lo(), c.lo() + 1});
    int hi = std::max({a.hi(), b.hi(), c.hi() + 1});
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int m = lo; m <= hi; ++m) {
        int ra = a.rank(m), rb = b.rank(m), rc = c.rank(m - 1);
        ranks.push_back(ra + rb + rc);
        IntMatrix dm(a.rank(m + 1) + b.rank(m + 1) + c.rank(m), ra + rb + rc);
        dm.paste(0, 0, a.d(m));
        dm.paste(a.rank(m + 1), ra, b.d(m));
        dm.paste(a.rank(m + 1) + b.rank(m + 1), 0, alpha.f(m));
        dm.paste(a.rank(m + 1) + b.rank(m + 1), ra, -beta.f(m));
        dm.paste(a.rank(m + 1) + b.rank(m + 1), ra + rb, -c.d(m - 1));
        diffs.push_back(std::move(dm));
    }
    return CochainComplex(lo, hi, std::move(ranks), std::move(diffs));
}

Cube sub_cube_without(const Cube& cube) {  // subsets avoiding the top bit
    Cube s;
    s.k = cube.k - 1;
    unsigned lim = (1u << s.k) - 1;
    for (unsigned i = 1; i <= lim; ++i) s.vals.insert({i, cube.vals.at(i)});
    for (const auto& [key, f] : cube.maps)
        if (key.second <= lim) s.maps.insert({key, f});
    return s;
}

Cube sub_cube_with(const Cube& cube) {  // subsets containing the top bit, re-keyed
    Cube s;
    s.k = cube.k - 1;
    unsigned v = 1u << s.k;
    unsigned lim = (1u << s.k) - 1;
    for (unsigned i = 1; i <= lim; ++i) s.vals.insert({i, cube.vals.at(i | v)});
    for (unsigned i = 1; i <= lim; ++i)
        for (unsigned j = i; j <= lim; ++j)
            if (i != j && (i & j) == i) s.maps.insert({{i, j}, cube.maps.at({i | v, j | v})});
    return s;
}

CochainComplex holim_rec(const Cube& cube);

ChainMap holim_rec_map(const Cube& c1, const Cube& c2, const std::map<unsigned, ChainMap>& transf) {
    if (c1.k == 1) return transf.at(1u);
    Cube a1 = sub_cube_without(c1), a2 = sub_cube_without(c2);
    Cube cc1 = sub_cube_with(c1), cc2 = sub_cube_with(c2);
    unsigned v = 1u << (c1.k - 1);
    std::map<unsigned, ChainMap> ta, tc;
    unsigned lim = v - 1;
    for (unsigned i = 1; i <= lim; ++i) {
        ta.insert({i, transf.at(i)});
        tc.insert({i, transf.at(i | v)});
    }
    ChainMap ma = holim_rec_map(a1, a2, ta);
    ChainMap mb = transf.at(v);
    ChainMap mc = holim_rec_map(cc1, cc2, tc);
    CochainComplex p1 = holim_rec(c1), p2 = holim_rec(c2);
    std::vector<IntMatrix> maps;
    for (int m = p1.lo(); m <= p1.hi(); ++m) {
        IntMatrix f(p2.rank(m), p1.rank(m));
        f.paste(0, 0, ma.f(m));
        f.paste(ma.cod.rank(m), ma.dom.rank(m), mb.f(m));
        f.paste(ma.cod.rank(m) + mb.cod.rank(m), ma.dom.rank(m) + mb.dom.rank(m), mc.f(m - 1));
        maps.push_back(std::move(f));
    }
    return make_chain_map(p1, p2, std::move(maps), p1.lo());
}

// holim of the constant punctured cube on k bits, with the canonical map from b
struct ConstHolim {
    CochainComplex h;
    ChainMap u;
};

ConstHolim const_holim(const CochainComplex& b, int k) {
    if (k == 1) return ConstHolim{b, identity_chain_map(b)};
    ConstHolim inner = const_holim(b, k - 1);
    CochainComplex p = pullback(inner.h, b, inner.h, identity_chain_map(inner.h), inner.u);
    std::vector<IntMatrix> maps;
    for (int m = b.lo(); m <= b.hi(); ++m) {
        IntMatrix f(p.rank(m), b.rank(m));
        f.paste(0, 0, inner.u.f(m));
        f.paste(inner.h.rank(m), 0, IntMatrix::identity(b.rank(m)));
        maps.push_back(std::move(f));
    }
    // degrees of p may extend below/above b's support
    int lo = std::min(b.lo(), p.lo());
    std::vector<IntMatrix> shaped;
    for (int m = lo; m <= std::max(b.hi(), p.hi()); ++m) {
        if (m >= b.lo() && m <= b.hi())
            shaped.push_back(maps[m - b.lo()]);
        else
            shaped.push_back(IntMatrix(p.rank(m), b.rank(m)));
    }
    return ConstHolim{p, make_chain_map(b, p, std::move(shaped), lo)};
}

Cube const_cube(const CochainComplex& b, int k) {
    Cube s;
    s.k = k;
    unsigned lim = (1u << k) - 1;
    ChainMap id = identity_chain_map(b);
    for (unsigned i = 1; i <= lim; ++i) s.vals.insert({i, b});
    for (unsigned i = 1; i <= lim; ++i)
        for (unsigned j = i; j <= lim; ++j)
            if (i != j && (i & j) == i) s.maps.insert({{i, j}, id});
    return s;
}

CochainComplex holim_rec(const Cube& cube) {
    if (cube.k == 1) return cube.vals.at(1u);
    Cube a = sub_cube_without(cube);
    Cube c = sub_cube_with(cube);
    unsigned v = 1u << (cube.k - 1);
    const CochainComplex& b = cube.vals.at(v);
    // alpha: holim(a) -> holim(c) from the natural transformation I ↦ I∪{v}
    std::map<unsigned, ChainMap> ta;
    for (unsigned i = 1; i < v; ++i) ta.insert({i, cube.maps.at({i, i | v})});
    ChainMap alpha = holim_rec_map(a, c, ta);
    // beta: b -> holim(c) through the constant cube at b
    ConstHolim ch = const_holim(b, cube.k - 1);
    std::map<unsigned, ChainMap> tb;
    for (unsigned i = 1; i < v; ++i) tb.insert({i, cube.maps.at({v, i | v})});
    ChainMap beta = compose_chain_maps(holim_rec_map(const_cube(b, cube.k - 1), c, tb), ch.u);
    return pullback(holim_rec(a), b, holim_rec(c), alpha, beta);
}

}  // namespace

CochainComplex cube_holim_recursive(const PuncturedCubeDiagram& d) {
    Cube cube;
    cube.k = d.n() + 1;
    unsigned full = d.full_mask();
    for (unsigned i = 1; i <= full; ++i) cube.vals.insert({i, d.value(i)});
    for (unsigned i = 1; i <= full; ++i)
        for (unsigned j = i; j <= full; ++j)
            if (i != j && (i & j) == i) cube.maps.insert({{i, j}, d.map(i, j)});
    return holim_rec(cube);
}

CochainComplex cube_holim(const PuncturedCubeDiagram& d) {
    CochainComplex direct = cube_holim_direct(d);
    CochainComplex rec = cube_holim_recursive(d);
    int lo = std::min(direct.lo(), rec.lo()), hi = std::max(direct.hi(), rec.hi());
    for (int m = lo; m <= hi; ++m)
        if (!(invariants(cohomology(direct, m)) == invariants(cohomology(rec, m))))
            throw std::logic_error("cube_holim: strategies disagree in degree " + std::to_string(m));
    return direct;
}

}  // namespace sseq
