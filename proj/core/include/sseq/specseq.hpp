#pragma once

#include <map>

#include "sseq/complexes.hpp"

namespace sseq {

enum class Convention { CE, BK };

/// One spectral-sequence page: bigraded subquotients of the ambient chain
/// groups with differentials of CE bidegree (r, 1−r). Entries outside the
/// stored support are the zero group.
struct Page {
    int r = 1;
    Convention convention = Convention::CE;
    std::map<std::pair<int, int>, Subquotient> entries;
    std::map<std::pair<int, int>, SubquotientHom> differentials;

    bool has(int p, int q) const { return entries.count({p, q}) != 0; }
    const Subquotient& entry(int p, int q) const { return entries.at({p, q}); }
};

/// Pages 1..r_max of the spectral sequence of a filtered complex, computed
/// from the cycle/boundary lattice formulas
///   Z_r^{p,q} = F^p K^{p+q} ∩ d^{-1}(F^{p+r} K^{p+q+1}),
///   E_r = Z_r / (Z_{r-1}^{p+1,q-1} + d Z_{r-1}^{p-r+1,q+r-2}).
std::vector<Page> pages(const FilteredComplex& f, int r_max);

/// The cycle/boundary lattices and the page entry at any (p,q), valid for all
/// integers p via the clamped filtration accessor (n = p+q).
Lattice page_cycles(const FilteredComplex& f, int r, int p, int n);
Lattice page_boundaries(const FilteredComplex& f, int r, int p, int n);
Subquotient page_entry(const FilteredComplex& f, int r, int p, int q);

/// Default page horizon: filtration width + 2 (stabilization is visible).
int default_r_max(const FilteredComplex& f);

/// Bigraded exact couple (D, E, i, π, ∂); all entries are subquotients of the
/// ambient chain groups and all maps are ambient matrices. Degrees at stage r:
/// i: D^{p+1,q-1} -> D^{p,q},  π_r: D^{p,q} -> E^{p+r-1,q-r+1},  ∂: E^{p,q} -> D^{p+1,q}.
struct ExactCouple {
    int r = 1;
    int p_lo = 0, p_hi = -1;  // stored p-support; lookups outside are clamped
    std::map<std::pair<int, int>, Subquotient> d_entries;
    std::map<std::pair<int, int>, Subquotient> e_entries;
    std::map<std::pair<int, int>, SubquotientHom> map_i;    // keyed by source (p,q) of D
    std::map<std::pair<int, int>, SubquotientHom> map_pi;   // keyed by source (p,q) of D
    std::map<std::pair<int, int>, SubquotientHom> map_del;  // keyed by source (p,q) of E
};

/// The exact couple of a filtered complex: D_1^{p,q} = H^{p+q}(F^p),
/// E_1^{p,q} = H^{p+q}(gr^p); exactness is checked at construction.
ExactCouple exact_couple(const FilteredComplex& f);

ExactCouple derive_couple(const ExactCouple& ec, const FilteredComplex& f);

/// Pages 1..r_max produced by iterating derive_couple; d_r = π_r ∘ ∂.
std::vector<Page> pages_from_couple(const FilteredComplex& f, int r_max);

/// Throws std::logic_error naming the failing position if the couple is not exact.
void check_couple_exactness(const ExactCouple& ec, const FilteredComplex& f);

/// invariants of F^p H^n / F^{p+1} H^n where F^p H^n = im(H^n(F^p) -> H^n(K)).
std::map<std::pair<int, int>, InvariantFactors> abutment_graded(const FilteredComplex& f);

/// Minimal r(n) from which every E_r^{p,n-p} (and every d_r touching total
/// degree n) has stabilized.
std::map<int, int> stabilization_index(const FilteredComplex& f);

Page convert_convention(const Page& p);

enum class IndexMapId { CE_TO_BK, DEC_REINDEX, AH_TO_DEC, AH_TO_AN };

struct Tri {
    int p, q, r;
    bool operator==(const Tri&) const = default;
};

Tri reindex(IndexMapId id, int p, int q, int r);

}  // namespace sseq
