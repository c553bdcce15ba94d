#pragma once

#include <cstdint>

#include "sseq/cosimplicial.hpp"
#include "sseq/specseq.hpp"

namespace sseq {

/// (Dec F)^p K^n = F^{p+n} K^n ∩ d^{-1}(F^{p+n+1} K^{n+1}) on the same complex.
FilteredComplex dec(const FilteredComplex& f);

/// Deligne filtration of Tot(K) by blockwise cases: full for b < -p,
/// ker(∂2) for b = -p, zero for b > -p. Agrees with dec(stupid_filtration(K)).
FilteredComplex dec_double(const DoubleComplex& k);

/// Comparison map E_r^{p,q}(Dec F) -> E_{r+1}^{2p+q,-p}(F), induced by the
/// identity on the ambient chain group; the cycle/boundary containments are
/// verified and their failure throws.
SubquotientHom gamma(const FilteredComplex& f, int r, int p, int q);

struct ComparisonReport {
    struct Item {
        int p, q, r;
        bool iso;
        bool d_commutes;
    };
    std::vector<Item> items;
    bool pass = true;
    std::string detail;  // first counterexample, human-readable
};

/// Checks, for 1 ≤ r ≤ r_max and every (p,q) in the Dec support, that gamma is
/// an isomorphism and commutes with the differentials (γ∘d_r = d_{r+1}∘γ).
ComparisonReport verify_comparison(const FilteredComplex& f, int r_max);

/// Builds the tower of termwise-truncated totalizations inside Tot(to_double(cc))
/// as a filtered complex and compares its pages (invariant factors and
/// d-ranks) against pages(dec_double(to_double(cc))).
ComparisonReport verify_postnikov_tot(const CosimplicialComplex& cc, int r_max);

/// The termwise-truncation tower as a filtered complex on Tot(to_double(cc)).
FilteredComplex postnikov_tower_filtration(const CosimplicialComplex& cc);

struct SizeParams {
    int columns = 4;      // number of bicomplex columns (a-range)
    int max_rank = 3;     // summand count scale
    int max_entry = 5;    // magnitude bound for strip multipliers / shears
    int brange = 3;       // vertical extent
};

/// Deterministic in seed: direct sums of elementary bicomplexes, unimodular
/// per-bidegree basis changes, then a filtration-respecting shear on Tot.
DoubleComplex random_double_complex(std::uint64_t seed, const SizeParams& sp);
FilteredComplex random_filtered_instance(std::uint64_t seed, const SizeParams& sp);

/// Random valid cosimplicial abelian group / complex (built from bar pieces
/// and constants, mixed by unimodular conjugation), deterministic in seed.
CosimplicialComplex random_cosimplicial_instance(std::uint64_t seed, int top);

}  // namespace sseq
