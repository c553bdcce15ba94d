#pragma once

#include "sseq/subquotient.hpp"

namespace sseq {

/// Bounded cochain complex of free Z-modules, supported in degrees [lo, hi].
/// d[n] : C^n -> C^{n+1}; d∘d = 0 is checked at construction.
class CochainComplex {
public:
    CochainComplex() : lo_(0), hi_(-1) {}
    CochainComplex(int lo, int hi, std::vector<int> ranks, std::vector<IntMatrix> diffs);

    static CochainComplex zero_complex() { return CochainComplex(); }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int rank(int n) const { return (n < lo_ || n > hi_) ? 0 : ranks_[n - lo_]; }
    /// d[n] : C^n -> C^{n+1}; a correctly shaped zero matrix outside support.
    IntMatrix d(int n) const;
    bool is_zero() const;
    bool operator==(const CochainComplex& o) const = default;

private:
    int lo_, hi_;
    std::vector<int> ranks_;
    std::vector<IntMatrix> diffs_;  // diffs_[n - lo_] : C^n -> C^{n+1}, last maps into rank(hi+1) = 0
};

Subquotient cohomology(const CochainComplex& c, int n);

struct ChainMap {
    CochainComplex dom;
    CochainComplex cod;
    std::vector<IntMatrix> maps;  // indexed from min(dom.lo, cod.lo)
    int lo = 0;

    IntMatrix f(int n) const;
};

/// Checks f[n+1]∘d_dom[n] = d_cod[n]∘f[n] and shapes; throws on violation.
ChainMap make_chain_map(const CochainComplex& dom, const CochainComplex& cod, std::vector<IntMatrix> maps, int lo);
ChainMap identity_chain_map(const CochainComplex& c);
ChainMap zero_chain_map(const CochainComplex& dom, const CochainComplex& cod);

/// cone(f)^n = dom^{n+1} ⊕ cod^n, d(a,b) = (−d·a, f(a)+d·b).
CochainComplex mapping_cone(const ChainMap& f);
/// C[k]^n = C^{n+k}, differential scaled by (−1)^k.
CochainComplex shift(const CochainComplex& c, int k);
/// hofib(f) = cone(f)[−1]; hofib^n = dom^n ⊕ cod^{n−1}.
CochainComplex hofib(const ChainMap& f);

/// Truncation τ_{≤m}: degrees < m unchanged, degree m replaced by ker d[m]
/// (re-based via its HNF basis), zero above. Support range is preserved.
struct Truncation {
    CochainComplex complex;
    ChainMap inclusion;  // into the original complex
};
Truncation canonical_truncation(const CochainComplex& c, int m);

/// Bicomplex with commuting differentials d1 (horizontal, a+1) and d2
/// (vertical, b+1); the totalization sign (−1)^a is applied in total_complex.
class DoubleComplex {
public:
    DoubleComplex() : amax_(-1), bmin_(0), bmax_(-1) {}
    /// ranks/d1/d2 indexed by [a][b - bmin]; d1[a][b]: K^{a,b}->K^{a+1,b}, d2[a][b]: K^{a,b}->K^{a,b+1}.
    DoubleComplex(int amax, int bmin, int bmax, std::vector<std::vector<int>> ranks,
                  std::vector<std::vector<IntMatrix>> d1, std::vector<std::vector<IntMatrix>> d2);

    int amax() const { return amax_; }
    int bmin() const { return bmin_; }
    int bmax() const { return bmax_; }
    int rank(int a, int b) const;
    IntMatrix d1(int a, int b) const;
    IntMatrix d2(int a, int b) const;
    bool operator==(const DoubleComplex& o) const = default;

    /// Offset of the (a, n−a) block inside Tot^n (blocks ordered by increasing a).
    int tot_offset(int n, int a) const;
    int tot_rank(int n) const;
    int tot_lo() const { return bmin_; }
    int tot_hi() const { return amax_ + bmax_; }

private:
    bool in_range(int a, int b) const { return a >= 0 && a <= amax_ && b >= bmin_ && b <= bmax_; }

    int amax_, bmin_, bmax_;
    std::vector<std::vector<int>> ranks_;
    std::vector<std::vector<IntMatrix>> d1_, d2_;
};

CochainComplex total_complex(const DoubleComplex& k);

/// Decreasing filtration by sublattices, full at pmin and zero at pmax;
/// nesting and d-stability are checked at construction.
class FilteredComplex {
public:
    FilteredComplex() : pmin_(0), pmax_(1) {}
    /// filt[p - pmin][n - complex.lo] for pmin ≤ p ≤ pmax.
    FilteredComplex(CochainComplex complex, int pmin, int pmax, std::vector<std::vector<Lattice>> filt);

    const CochainComplex& complex() const { return complex_; }
    int pmin() const { return pmin_; }
    int pmax() const { return pmax_; }
    int width() const { return pmax_ - pmin_; }
    /// F^p K^n, clamped: full for p ≤ pmin, zero for p ≥ pmax, zero ambient outside degree support.
    Lattice filt(int p, int n) const;
    bool operator==(const FilteredComplex& o) const = default;

private:
    CochainComplex complex_;
    int pmin_, pmax_;
    std::vector<std::vector<Lattice>> filt_;
};

FilteredComplex stupid_filtration(const DoubleComplex& k);

/// Equality as filtrations: same complex and equal F^p K^n lattices for every
/// integer p (via the clamped accessor), regardless of the stored p-windows.
bool filtrations_equal(const FilteredComplex& a, const FilteredComplex& b);

/// Two-step filtration full ⊇ 0 (every complex with its trivial filtration).
FilteredComplex trivial_filtration(const CochainComplex& c);

}  // namespace sseq
