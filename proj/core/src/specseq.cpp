#include "sseq/specseq.hpp"

#include <stdexcept>

namespace sseq {

Lattice page_cycles(const FilteredComplex& f, int r, int p, int n) {
    return lattice_intersect(f.filt(p, n), lattice_preimage(f.complex().d(n), f.filt(p + r, n + 1)));
}

Lattice page_boundaries(const FilteredComplex& f, int r, int p, int n) {
    return lattice_sum(page_cycles(f, r - 1, p + 1, n),
                       lattice_image(f.complex().d(n - 1), page_cycles(f, r - 1, p - r + 1, n - 1)));
}

Subquotient page_entry(const FilteredComplex& f, int r, int p, int q) {
    return Subquotient(page_cycles(f, r, p, p + q), page_boundaries(f, r, p, p + q));
}

namespace {

Lattice z_lat(const FilteredComplex& f, int r, int p, int n) { return page_cycles(f, r, p, n); }
Lattice b_lat(const FilteredComplex& f, int r, int p, int n) { return page_boundaries(f, r, p, n); }

Subquotient trivial_sub(int ambient) { return Subquotient(Lattice::zero(ambient), Lattice::zero(ambient)); }

// Stage-r couple entries outside the stored p-window have clamped values:
// far left every F^p is full, far right every F^p is zero.
Subquotient d_lookup(const ExactCouple& ec, const FilteredComplex& f, int p, int q) {
    auto it = ec.d_entries.find({p, q});
    if (it != ec.d_entries.end()) return it->second;
    int n = p + q;
    const CochainComplex& c = f.complex();
    if (n < c.lo() || n > c.hi()) return trivial_sub(c.rank(n));
    if (p > ec.p_hi) return trivial_sub(c.rank(n));
    if (p < ec.p_lo) {
        if (p > f.pmin() - ec.r + 1) throw std::logic_error("exact couple: p-support exhausted (D)");
        return Subquotient(kernel_lattice(c.d(n)), Lattice::from_generators(c.d(n - 1)));
    }
    return trivial_sub(c.rank(n));  // degree inside, p inside, but unstored: zero by construction
}

Subquotient e_lookup(const ExactCouple& ec, const FilteredComplex& f, int p, int q) {
    auto it = ec.e_entries.find({p, q});
    if (it != ec.e_entries.end()) return it->second;
    int n = p + q;
    const CochainComplex& c = f.complex();
    if (n < c.lo() || n > c.hi()) return trivial_sub(c.rank(n));
    if (p > ec.p_hi) return trivial_sub(c.rank(n));
    if (p < ec.p_lo) {
        if (p > f.pmin() - ec.r) throw std::logic_error("exact couple: p-support exhausted (E)");
        return Subquotient(Lattice::full(c.rank(n)), Lattice::full(c.rank(n)));
    }
    return trivial_sub(c.rank(n));
}

void add_couple_maps(ExactCouple& ec, const FilteredComplex& f) {
    const CochainComplex& c = f.complex();
    for (const auto& [key, d_pq] : ec.d_entries) {
        auto [p, q] = key;
        int n = p + q;
        ec.map_i.insert({key, induced_hom(IntMatrix::identity(c.rank(n)), d_pq, d_lookup(ec, f, p - 1, q + 1))});
        ec.map_pi.insert({key, induced_hom(IntMatrix::identity(c.rank(n)), d_pq,
                                           e_lookup(ec, f, p + ec.r - 1, q - ec.r + 1))});
    }
    for (const auto& [key, e_pq] : ec.e_entries) {
        auto [p, q] = key;
        int n = p + q;
        ec.map_del.insert({key, induced_hom(c.d(n), e_pq, d_lookup(ec, f, p + 1, q))});
    }
}

}  // namespace

int default_r_max(const FilteredComplex& f) { return f.width() + 2; }

std::vector<Page> pages(const FilteredComplex& f, int r_max) {
    if (r_max < 1) throw std::invalid_argument("pages: r_max must be >= 1");
    const CochainComplex& c = f.complex();
    std::vector<Page> out;
    for (int r = 1; r <= r_max; ++r) {
        Page pg;
        pg.r = r;
        for (int p = f.pmin(); p < f.pmax(); ++p)
            for (int n = c.lo(); n <= c.hi(); ++n)
                pg.entries.insert({{p, n - p}, Subquotient(z_lat(f, r, p, n), b_lat(f, r, p, n))});
        for (const auto& [key, e_pq] : pg.entries) {
            auto [p, q] = key;
            auto target = pg.entries.find({p + r, q - r + 1});
            if (target == pg.entries.end()) continue;
            pg.differentials.insert({key, induced_hom(c.d(p + q), e_pq, target->second)});
        }
        out.push_back(std::move(pg));
    }
    return out;
}

void check_couple_exactness(const ExactCouple& ec, const FilteredComplex& f) {
    const CochainComplex& c = f.complex();
    const int r = ec.r;
    auto fail = [&](const char* where, int p, int q) {
        throw std::logic_error(std::string("exact couple: exactness fails at ") + where + " (p=" +
                               std::to_string(p) + ", q=" + std::to_string(q) + ", r=" + std::to_string(r) + ")");
    };
    for (int p = f.pmin() - r - 1; p <= f.pmax() + r + 1; ++p)
        for (int n = c.lo(); n <= c.hi(); ++n) {
            int q = n - p;
            Subquotient d_pq = d_lookup(ec, f, p, q);
            Subquotient e_pq = e_lookup(ec, f, p, q);
            // at D: im(i: D^{p+1,q-1} -> D^{p,q}) = ker(π_r: D^{p,q} -> E^{p+r-1,q-r+1})
            Lattice im_i = lattice_sum(d_lookup(ec, f, p + 1, q - 1).cycles(), d_pq.boundaries());
            Lattice ker_pi = lattice_intersect(
                d_pq.cycles(), e_lookup(ec, f, p + r - 1, q - r + 1).boundaries());
            if (!(im_i == ker_pi)) fail("im i = ker pi", p, q);
            // at E: im(π_r: D^{p-r+1,q+r-1} -> E^{p,q}) = ker(∂: E^{p,q} -> D^{p+1,q})
            Lattice im_pi = lattice_sum(d_lookup(ec, f, p - r + 1, q + r - 1).cycles(), e_pq.boundaries());
            Lattice ker_del = lattice_intersect(
                e_pq.cycles(), lattice_preimage(c.d(n), d_lookup(ec, f, p + 1, q).boundaries()));
            if (!(im_pi == ker_del)) fail("im pi = ker del", p, q);
            // at D: im(∂: E^{p-1,q} -> D^{p,q}) = ker(i: D^{p,q} -> D^{p-1,q+1})
            Lattice im_del = lattice_sum(lattice_image(c.d(n - 1), e_lookup(ec, f, p - 1, q).cycles()),
                                         d_pq.boundaries());
            Lattice ker_i = lattice_intersect(d_pq.cycles(), d_lookup(ec, f, p - 1, q + 1).boundaries());
            if (!(im_del == ker_i)) fail("im del = ker i", p, q);
        }
}

namespace {

ExactCouple exact_couple_with_margin(const FilteredComplex& f, int margin) {
    const CochainComplex& c = f.complex();
    ExactCouple ec;
    ec.r = 1;
    ec.p_lo = f.pmin() - margin;
    ec.p_hi = f.pmax() + margin;
    for (int p = ec.p_lo; p <= ec.p_hi; ++p)
        for (int n = c.lo(); n <= c.hi(); ++n) {
            int q = n - p;
            // D_1^{p,q} = H^n(F^p) as a subquotient of the ambient K^n
            ec.d_entries.insert({{p, q}, Subquotient(lattice_intersect(f.filt(p, n), kernel_lattice(c.d(n))),
                                                     lattice_image(c.d(n - 1), f.filt(p, n - 1)))});
            // E_1^{p,q} = H^n(gr^p)
            ec.e_entries.insert({{p, q}, Subquotient(z_lat(f, 1, p, n), b_lat(f, 1, p, n))});
        }
    add_couple_maps(ec, f);
    check_couple_exactness(ec, f);
    return ec;
}

}  // namespace

ExactCouple exact_couple(const FilteredComplex& f) {
    return exact_couple_with_margin(f, default_r_max(f) + 2);
}

ExactCouple derive_couple(const ExactCouple& ec, const FilteredComplex& f) {
    const CochainComplex& c = f.complex();
    const int r = ec.r;
    ExactCouple next;
    next.r = r + 1;
    next.p_lo = ec.p_lo;
    next.p_hi = ec.p_hi;
    for (const auto& [key, d_pq] : ec.d_entries) {
        auto [p, q] = key;
        int n = p + q;
        // D_{r+1}^{p,q} = i(D_r^{p+1,q-1}), presented inside D_r^{p,q}
        auto i_src = ec.map_i.find({p + 1, q - 1});
        IntMatrix i_mat = i_src != ec.map_i.end() ? i_src->second.matrix : IntMatrix::identity(c.rank(n));
        Lattice zc = lattice_image(i_mat, d_lookup(ec, f, p + 1, q - 1).cycles());
        next.d_entries.insert({key, Subquotient(zc, lattice_intersect(zc, d_pq.boundaries()))});
    }
    for (const auto& [key, e_pq] : ec.e_entries) {
        auto [p, q] = key;
        int n = p + q;
        // E_{r+1} = ker d_r / im d_r, with d_r = π_r ∘ ∂ represented on ambients
        auto del = ec.map_del.find({p, q});
        IntMatrix dr_out = del != ec.map_del.end() ? del->second.matrix : c.d(n);
        // Intersecting with F^{p+r+1} refines the representatives without
        // changing the quotient (every ker d_r class has such a representative);
        // it makes the next-stage del a containment-valid lattice map.
        Lattice zc = lattice_intersect(
            e_pq.cycles(),
            lattice_preimage(dr_out, lattice_intersect(e_lookup(ec, f, p + r, q - r + 1).boundaries(),
                                                       f.filt(p + r + 1, n + 1))));
        auto del_in = ec.map_del.find({p - r, q + r - 1});
        IntMatrix dr_in = del_in != ec.map_del.end() ? del_in->second.matrix : c.d(n - 1);
        Lattice bd = lattice_sum(e_pq.boundaries(),
                                 lattice_image(dr_in, e_lookup(ec, f, p - r, q + r - 1).cycles()));
        // Second isomorphism theorem: zc/(zc ∩ bd) ≅ (zc + bd)/bd = ker d_r / im d_r.
        next.e_entries.insert({key, Subquotient(zc, lattice_intersect(zc, bd))});
    }
    add_couple_maps(next, f);
    check_couple_exactness(next, f);
    return next;
}

std::vector<Page> pages_from_couple(const FilteredComplex& f, int r_max) {
    if (r_max < 1) throw std::invalid_argument("pages_from_couple: r_max must be >= 1");
    const CochainComplex& c = f.complex();
    ExactCouple ec = exact_couple_with_margin(f, r_max + 2);
    std::vector<Page> out;
    for (int r = 1; r <= r_max; ++r) {
        Page pg;
        pg.r = r;
        for (int p = f.pmin(); p < f.pmax(); ++p)
            for (int n = c.lo(); n <= c.hi(); ++n) pg.entries.insert({{p, n - p}, e_lookup(ec, f, p, n - p)});
        for (const auto& [key, e_pq] : pg.entries) {
            auto [p, q] = key;
            auto target = pg.entries.find({p + r, q - r + 1});
            if (target == pg.entries.end()) continue;
            auto del = ec.map_del.find(key);
            auto pi = ec.map_pi.find({p + 1, q});
            IntMatrix dr = (del != ec.map_del.end() && pi != ec.map_pi.end())
                               ? pi->second.matrix * del->second.matrix
                               : c.d(p + q);
            pg.differentials.insert({key, induced_hom(dr, e_pq, target->second)});
        }
        out.push_back(std::move(pg));
        if (r < r_max) ec = derive_couple(ec, f);
    }
    return out;
}

std::map<std::pair<int, int>, InvariantFactors> abutment_graded(const FilteredComplex& f) {
    const CochainComplex& c = f.complex();
    std::map<std::pair<int, int>, InvariantFactors> out;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        Lattice im_d = Lattice::from_generators(c.d(n - 1));
        auto level = [&](int p) {
            return lattice_sum(lattice_intersect(f.filt(p, n), kernel_lattice(c.d(n))), im_d);
        };
        for (int p = f.pmin(); p < f.pmax(); ++p)
            out.insert({{p, n}, invariants(Subquotient(level(p), level(p + 1)))});
    }
    return out;
}

std::map<int, int> stabilization_index(const FilteredComplex& f) {
    const CochainComplex& c = f.complex();
    int horizon = default_r_max(f);
    std::vector<Page> pgs = pages(f, horizon);
    std::map<int, int> out;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        auto degree_stable_from = [&](int r) {
            // all pages r..horizon agree at total degree n and no d with source
            // or target in degree n is nonzero
            for (int ri = r; ri <= horizon; ++ri) {
                const Page& pg = pgs[ri - 1];
                const Page& last = pgs[horizon - 1];
                for (const auto& [key, e_pq] : pg.entries) {
                    if (key.first + key.second != n) continue;
                    if (!(invariants(e_pq) == invariants(last.entries.at(key)))) return false;
                }
                for (const auto& [key, d_pq] : pg.differentials) {
                    int dn = key.first + key.second;
                    if (dn != n && dn != n - 1) continue;
                    if (!d_pq.cod.boundaries().contains(d_pq.matrix * d_pq.dom.cycles().basis())) return false;
                }
            }
            return true;
        };
        int r = horizon;
        while (r > 1 && degree_stable_from(r - 1)) --r;
        out[n] = r;
    }
    return out;
}

Page convert_convention(const Page& p) {
    Page out;
    out.r = p.r;
    out.convention = p.convention == Convention::CE ? Convention::BK : Convention::CE;
    for (const auto& [key, e] : p.entries) out.entries.insert({{key.first, -key.second}, e});
    for (const auto& [key, d] : p.differentials) out.differentials.insert({{key.first, -key.second}, d});
    return out;
}

Tri reindex(IndexMapId id, int p, int q, int r) {
    switch (id) {
        case IndexMapId::CE_TO_BK:
            return Tri{p, -q, r};
        case IndexMapId::DEC_REINDEX:
            return Tri{2 * p + q, -p, r + 1};
        case IndexMapId::AH_TO_DEC:
            return Tri{2 * p, q - p, 2 * r};
        case IndexMapId::AH_TO_AN:
            return Tri{3 * p + q, 2 * p, 2 * r + 1};
    }
    throw std::invalid_argument("reindex: unknown index map");
}

}  // namespace sseq
