#include "sseq/complexes.hpp"

#include <stdexcept>

namespace sseq {

CochainComplex::CochainComplex(int lo, int hi, std::vector<int> ranks, std::vector<IntMatrix> diffs)
    : lo_(lo), hi_(hi), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
    if (hi_ < lo_) {
        ranks_.clear();
        diffs_.clear();
        return;
    }
    if ((int)ranks_.size() != hi_ - lo_ + 1 || (int)diffs_.size() != hi_ - lo_ + 1)
        throw std::invalid_argument("CochainComplex: ranks/diffs size mismatch");
    for (int n = lo_; n <= hi_; ++n) {
        const IntMatrix& dn = diffs_[n - lo_];
        if (dn.cols() != rank(n) || dn.rows() != rank(n + 1))
            throw std::invalid_argument("CochainComplex: differential shape mismatch at degree " + std::to_string(n));
        if (n > lo_ && !(dn * diffs_[n - 1 - lo_]).is_zero())
            throw std::invalid_argument("CochainComplex: d∘d != 0 at degree " + std::to_string(n - 1));
    }
}

IntMatrix CochainComplex::d(int n) const {
    if (n < lo_ || n > hi_) return IntMatrix(rank(n + 1), rank(n));
    return diffs_[n - lo_];
}

bool CochainComplex::is_zero() const {
    for (int r : ranks_)
        if (r != 0) return false;
    return true;
}

Subquotient cohomology(const CochainComplex& c, int n) {
    return Subquotient(kernel_lattice(c.d(n)), Lattice::from_generators(c.d(n - 1)));
}

IntMatrix ChainMap::f(int n) const {
    int idx = n - lo;
    if (idx < 0 || idx >= (int)maps.size()) return IntMatrix(cod.rank(n), dom.rank(n));
    return maps[idx];
}

ChainMap make_chain_map(const CochainComplex& dom, const CochainComplex& cod, std::vector<IntMatrix> maps, int lo) {
    ChainMap cm{dom, cod, std::move(maps), lo};
    for (int n = lo; n < lo + (int)cm.maps.size(); ++n)
        if (cm.maps[n - lo].cols() != dom.rank(n) || cm.maps[n - lo].rows() != cod.rank(n))
            throw std::invalid_argument("ChainMap: shape mismatch at degree " + std::to_string(n));
    int n0 = std::min(dom.lo(), cod.lo()) - 1;
    int n1 = std::max(dom.hi(), cod.hi());
    for (int n = n0; n <= n1; ++n)
        if (!(cm.f(n + 1) * dom.d(n) - cod.d(n) * cm.f(n)).is_zero())
            throw std::invalid_argument("ChainMap: does not commute with d at degree " + std::to_string(n));
    return cm;
}

ChainMap identity_chain_map(const CochainComplex& c) {
    std::vector<IntMatrix> maps;
    for (int n = c.lo(); n <= c.hi(); ++n) maps.push_back(IntMatrix::identity(c.rank(n)));
    return make_chain_map(c, c, std::move(maps), c.lo());
}

ChainMap zero_chain_map(const CochainComplex& dom, const CochainComplex& cod) {
    return make_chain_map(dom, cod, {}, 0);
}

CochainComplex mapping_cone(const ChainMap& f) {
    int lo = std::min(f.dom.lo() - 1, f.cod.lo());
    int hi = std::max(f.dom.hi() - 1, f.cod.hi());
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        int ra = f.dom.rank(n + 1), rb = f.cod.rank(n);
        ranks.push_back(ra + rb);
        IntMatrix d(f.dom.rank(n + 2) + f.cod.rank(n + 1), ra + rb);
        d.paste(0, 0, -f.dom.d(n + 1));
        d.paste(f.dom.rank(n + 2), 0, f.f(n + 1));
        d.paste(f.dom.rank(n + 2), ra, f.cod.d(n));
        diffs.push_back(std::move(d));
    }
    return CochainComplex(lo, hi, std::move(ranks), std::move(diffs));
}

CochainComplex shift(const CochainComplex& c, int k) {
    int lo = c.lo() - k, hi = c.hi() - k;
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        ranks.push_back(c.rank(n + k));
        diffs.push_back(k % 2 == 0 ? c.d(n + k) : -c.d(n + k));
    }
    return CochainComplex(lo, hi, std::move(ranks), std::move(diffs));
}

CochainComplex hofib(const ChainMap& f) { return shift(mapping_cone(f), -1); }

Truncation canonical_truncation(const CochainComplex& c, int m) {
    if (c.hi() < c.lo() || m >= c.hi()) return Truncation{c, identity_chain_map(c)};
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs, incl;
    IntMatrix kbasis = kernel_lattice(c.d(m)).basis();  // empty when m < lo (kernel of 0x0)
    for (int n = c.lo(); n <= c.hi(); ++n) {
        if (n < m) {
            ranks.push_back(c.rank(n));
            incl.push_back(IntMatrix::identity(c.rank(n)));
            if (n < m - 1) {
                diffs.push_back(c.d(n));
            } else {
                auto x = solve_columns(kbasis, c.d(n));
                if (!x) throw std::logic_error("canonical_truncation: image of d not in kernel");
                diffs.push_back(*x);
            }
        } else if (n == m) {
            ranks.push_back(kbasis.cols());
            incl.push_back(kbasis);
            diffs.push_back(IntMatrix(0, kbasis.cols()));
        } else {
            ranks.push_back(0);
            incl.push_back(IntMatrix(c.rank(n), 0));
            diffs.push_back(IntMatrix(0, 0));
        }
    }
    CochainComplex t(c.lo(), c.hi(), std::move(ranks), std::move(diffs));
    ChainMap inc = make_chain_map(t, c, std::move(incl), c.lo());
    return Truncation{std::move(t), std::move(inc)};
}

DoubleComplex::DoubleComplex(int amax, int bmin, int bmax, std::vector<std::vector<int>> ranks,
                             std::vector<std::vector<IntMatrix>> d1, std::vector<std::vector<IntMatrix>> d2)
    : amax_(amax), bmin_(bmin), bmax_(bmax), ranks_(std::move(ranks)), d1_(std::move(d1)), d2_(std::move(d2)) {
    if (amax_ < 0 || bmax_ < bmin_) {
        amax_ = -1;
        bmin_ = 0;
        bmax_ = -1;
        ranks_.clear();
        d1_.clear();
        d2_.clear();
        return;
    }
    auto dims_ok = [&](const auto& v) {
        if ((int)v.size() != amax_ + 1) return false;
        for (const auto& row : v)
            if ((int)row.size() != bmax_ - bmin_ + 1) return false;
        return true;
    };
    if (!dims_ok(ranks_) || !dims_ok(d1_) || !dims_ok(d2_))
        throw std::invalid_argument("DoubleComplex: table size mismatch");
    for (int a = 0; a <= amax_; ++a)
        for (int b = bmin_; b <= bmax_; ++b) {
            if (this->d1(a, b).cols() != rank(a, b) || this->d1(a, b).rows() != rank(a + 1, b) ||
                this->d2(a, b).cols() != rank(a, b) || this->d2(a, b).rows() != rank(a, b + 1))
                throw std::invalid_argument("DoubleComplex: differential shape mismatch at (" + std::to_string(a) +
                                            "," + std::to_string(b) + ")");
            if (!(this->d1(a + 1, b) * this->d1(a, b)).is_zero() || !(this->d2(a, b + 1) * this->d2(a, b)).is_zero() ||
                !(this->d2(a + 1, b) * this->d1(a, b) - this->d1(a, b + 1) * this->d2(a, b)).is_zero())
                throw std::invalid_argument("DoubleComplex: d1/d2 relations fail at (" + std::to_string(a) + "," +
                                            std::to_string(b) + ")");
        }
}

int DoubleComplex::rank(int a, int b) const { return in_range(a, b) ? ranks_[a][b - bmin_] : 0; }

IntMatrix DoubleComplex::d1(int a, int b) const {
    if (!in_range(a, b)) return IntMatrix(rank(a + 1, b), rank(a, b));
    return d1_[a][b - bmin_];
}

IntMatrix DoubleComplex::d2(int a, int b) const {
    if (!in_range(a, b)) return IntMatrix(rank(a, b + 1), rank(a, b));
    return d2_[a][b - bmin_];
}

int DoubleComplex::tot_offset(int n, int a) const {
    int off = 0;
    for (int a2 = 0; a2 < a; ++a2) off += rank(a2, n - a2);
    return off;
}

int DoubleComplex::tot_rank(int n) const { return tot_offset(n, amax_ + 1); }

CochainComplex total_complex(const DoubleComplex& k) {
    if (k.amax() < 0) return CochainComplex();
    int lo = k.tot_lo(), hi = k.tot_hi();
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        ranks.push_back(k.tot_rank(n));
        IntMatrix d(k.tot_rank(n + 1), k.tot_rank(n));
        for (int a = 0; a <= k.amax(); ++a) {
            int b = n - a;
            if (k.rank(a, b) == 0) continue;
            int src = k.tot_offset(n, a);
            d.paste(k.tot_offset(n + 1, a + 1), src, k.d1(a, b));
            d.paste(k.tot_offset(n + 1, a), src, a % 2 == 0 ? k.d2(a, b) : -k.d2(a, b));
        }
        diffs.push_back(std::move(d));
    }
    return CochainComplex(lo, hi, std::move(ranks), std::move(diffs));
}

FilteredComplex::FilteredComplex(CochainComplex complex, int pmin, int pmax, std::vector<std::vector<Lattice>> filt)
    : complex_(std::move(complex)), pmin_(pmin), pmax_(pmax), filt_(std::move(filt)) {
    if (pmax_ <= pmin_) throw std::invalid_argument("FilteredComplex: pmax must exceed pmin");
    int degs = complex_.hi() - complex_.lo() + 1;
    if (degs < 0) degs = 0;
    if ((int)filt_.size() != pmax_ - pmin_ + 1)
        throw std::invalid_argument("FilteredComplex: filtration step count mismatch");
    for (const auto& row : filt_)
        if ((int)row.size() != degs) throw std::invalid_argument("FilteredComplex: degree count mismatch");
    for (int p = pmin_; p <= pmax_; ++p)
        for (int n = complex_.lo(); n <= complex_.hi(); ++n) {
            const Lattice& l = filt_[p - pmin_][n - complex_.lo()];
            if (l.ambient_rank() != complex_.rank(n))
                throw std::invalid_argument("FilteredComplex: lattice ambient mismatch");
            if (p == pmin_ && !l.is_full())
                throw std::invalid_argument("FilteredComplex: F^pmin must be the full lattice");
            if (p == pmax_ && !l.is_zero())
                throw std::invalid_argument("FilteredComplex: F^pmax must be zero");
            if (p > pmin_ && !filt_[p - 1 - pmin_][n - complex_.lo()].contains(l))
                throw std::invalid_argument("FilteredComplex: filtration not decreasing at p=" + std::to_string(p) +
                                            ", n=" + std::to_string(n));
            if (!this->filt(p, n + 1).contains(lattice_image(complex_.d(n), l)))
                throw std::invalid_argument("FilteredComplex: filtration not d-stable at p=" + std::to_string(p) +
                                            ", n=" + std::to_string(n));
        }
}

Lattice FilteredComplex::filt(int p, int n) const {
    if (n < complex_.lo() || n > complex_.hi()) return Lattice::zero(0);
    if (p <= pmin_) return Lattice::full(complex_.rank(n));
    if (p >= pmax_) return Lattice::zero(complex_.rank(n));
    return filt_[p - pmin_][n - complex_.lo()];
}

bool filtrations_equal(const FilteredComplex& a, const FilteredComplex& b) {
    if (a.complex() != b.complex()) return false;
    int p0 = std::min(a.pmin(), b.pmin()) - 1, p1 = std::max(a.pmax(), b.pmax()) + 1;
    for (int p = p0; p <= p1; ++p)
        for (int n = a.complex().lo(); n <= a.complex().hi(); ++n)
            if (a.filt(p, n) != b.filt(p, n)) return false;
    return true;
}

FilteredComplex stupid_filtration(const DoubleComplex& k) {
    CochainComplex tot = total_complex(k);
    int pmin = 0, pmax = k.amax() + 1;
    if (k.amax() < 0) return trivial_filtration(tot);
    std::vector<std::vector<Lattice>> filt;
    for (int p = pmin; p <= pmax; ++p) {
        std::vector<Lattice> row;
        for (int n = tot.lo(); n <= tot.hi(); ++n) {
            int off = k.tot_offset(n, std::max(p, 0));
            int total = tot.rank(n);
            IntMatrix gens(total, total - off);
            for (int j = 0; j < total - off; ++j) gens.at(off + j, j) = 1;
            row.push_back(Lattice::from_generators(gens));
        }
        filt.push_back(std::move(row));
    }
    return FilteredComplex(std::move(tot), pmin, pmax, std::move(filt));
}

FilteredComplex trivial_filtration(const CochainComplex& c) {
    std::vector<Lattice> full_row, zero_row;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        full_row.push_back(Lattice::full(c.rank(n)));
        zero_row.push_back(Lattice::zero(c.rank(n)));
    }
    return FilteredComplex(c, 0, 1, {std::move(full_row), std::move(zero_row)});
}

}  // namespace sseq
