#pragma once

#include <map>

#include "sseq/complexes.hpp"

namespace sseq {

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Cosimplicial abelian group truncated at level `top`: free groups C^0..C^top
/// with coface maps d^i: C^{n-1} -> C^n (0 ≤ i ≤ n) and codegeneracies
/// s^i: C^{n+1} -> C^n (0 ≤ i ≤ n). The cosimplicial identities are checked.
class CosimplicialAbGroup {
public:
    /// coface[n][i] for 1 ≤ n ≤ top; codeg[n][i] for 0 ≤ n ≤ top-1.
    CosimplicialAbGroup(int top, std::vector<int> ranks, std::vector<std::vector<IntMatrix>> coface,
                        std::vector<std::vector<IntMatrix>> codeg);
    static CosimplicialAbGroup unchecked(int top, std::vector<int> ranks,
                                         std::vector<std::vector<IntMatrix>> coface,
                                         std::vector<std::vector<IntMatrix>> codeg);

    int top() const { return top_; }
    int rank(int n) const { return ranks_[n]; }
    const IntMatrix& coface(int n, int i) const { return coface_[n][i]; }
    const IntMatrix& codeg(int n, int i) const { return codeg_[n][i]; }

private:
    CosimplicialAbGroup() = default;
    int top_ = 0;
    std::vector<int> ranks_;
    std::vector<std::vector<IntMatrix>> coface_, codeg_;
};

ValidationReport validate_cosimplicial(const CosimplicialAbGroup& c);

/// Cosimplicial object in cochain complexes (uniform internal support range),
/// structure maps are chain maps satisfying the cosimplicial identities.
class CosimplicialComplex {
public:
    CosimplicialComplex(int top, std::vector<CochainComplex> levels, std::vector<std::vector<ChainMap>> coface,
                        std::vector<std::vector<ChainMap>> codeg);
    static CosimplicialComplex unchecked(int top, std::vector<CochainComplex> levels,
                                         std::vector<std::vector<ChainMap>> coface,
                                         std::vector<std::vector<ChainMap>> codeg);

    int top() const { return top_; }
    const CochainComplex& level(int n) const { return levels_[n]; }
    const ChainMap& coface(int n, int i) const { return coface_[n][i]; }
    const ChainMap& codeg(int n, int i) const { return codeg_[n][i]; }

private:
    CosimplicialComplex() = default;
    int top_ = 0;
    std::vector<CochainComplex> levels_;
    std::vector<std::vector<ChainMap>> coface_, codeg_;
};

ValidationReport validate_cosimplicial(const CosimplicialComplex& c);

/// N^n = ∩_{i<n} ker s^i with the alternating coface sum, re-based via HNF
/// bases of the kernels. The top-level outgoing differential is zero (the
/// truncated object carries no data beyond level `top`), so cohomology in
/// degree `top` is an edge artifact; degrees < top are faithful.
CochainComplex normalized_complex(const CosimplicialAbGroup& c);

/// Degree-n group C^n with d = Σ (-1)^i d^i; quasi-isomorphic to the
/// normalized complex in degrees < top.
CochainComplex moore_complex(const CosimplicialAbGroup& c);

/// View a cosimplicial abelian group as a cosimplicial complex concentrated
/// in internal degree 0.
CosimplicialComplex to_complexes(const CosimplicialAbGroup& c);

/// Bicomplex: column a = normalized complex across the cosimplicial direction
/// of internal degree-wise groups, ∂1 = alternating coface sum, ∂2 = internal d.
DoubleComplex to_double(const CosimplicialComplex& cc);

/// to_double plus the HNF kernel bases identifying column a, internal degree b
/// with a sublattice of level(a)^b (needed to compare sub-objects inside Tot).
struct NormalizedDouble {
    DoubleComplex dc;
    std::vector<std::vector<IntMatrix>> basis;  // basis[a][b - bmin]
};
NormalizedDouble to_double_with_bases(const CosimplicialComplex& cc);

/// Columns 0..n of to_double(cc).
DoubleComplex truncate_columns(const DoubleComplex& k, int n);

/// Stupid filtration of Tot of the column-truncated bicomplex.
FilteredComplex tot_truncated(const CosimplicialComplex& cc, int n);

/// Column n of to_double shifted into total degrees n+b; its cohomology equals
/// that of Tot_(n)/Tot_(n-1).
CochainComplex tot_layer(const CosimplicialComplex& cc, int n);

/// Levelwise canonical truncation τ_{≤ -m} with restricted structure maps.
CosimplicialComplex termwise_truncation(const CosimplicialComplex& cc, int m);

/// Finite group given by its multiplication table; element 0 is the identity.
struct FiniteGroup {
    std::vector<std::vector<int>> mult;

    int order() const { return (int)mult.size(); }
    int op(int a, int b) const { return mult[a][b]; }
};

/// Checks table shape, identity, associativity and inverses; throws on failure.
FiniteGroup make_group(std::vector<std::vector<int>> mult);
FiniteGroup cyclic_group(int m);
FiniteGroup product_group(const FiniteGroup& g, const FiniteGroup& h);

/// Cobar construction: C^n = Map(G^n, Z^coeff_rank); Moore cohomology is
/// H^*(G; Z^coeff_rank) in degrees < top.
CosimplicialAbGroup bar_cosimplicial(const FiniteGroup& g, int coeff_rank, int top);

/// Coefficients with torsion, presented per level by the two-term complex
/// Map(G^n, Z^t) --diag(d_i)--> Map(G^n, Z^{r+t}) in internal degrees -1, 0.
CosimplicialComplex bar_cosimplicial_coeff(const FiniteGroup& g, const InvariantFactors& a, int top);

/// Functor on nonempty subsets of {1..n+1} (bitmask bit j-1 = element j),
/// with the opposite of the inclusion order handled in the structure maps.
class PuncturedCubeDiagram {
public:
    PuncturedCubeDiagram(int n, std::map<unsigned, CochainComplex> values,
                         std::map<std::pair<unsigned, unsigned>, ChainMap> maps);

    int n() const { return n_; }
    unsigned full_mask() const { return (1u << (n_ + 1)) - 1; }
    const CochainComplex& value(unsigned mask) const { return values_.at(mask); }
    const ChainMap& map(unsigned from, unsigned to) const { return maps_.at({from, to}); }

private:
    int n_;
    std::map<unsigned, CochainComplex> values_;
    std::map<std::pair<unsigned, unsigned>, ChainMap> maps_;
};

PuncturedCubeDiagram cube_from_cosimplicial(const CosimplicialComplex& cc, int n);

/// Total-fiber complex ⊕_{∅≠I} value(I)[1-|I|] with signed edge maps.
CochainComplex cube_holim_direct(const PuncturedCubeDiagram& d);
/// Recursive homotopy-pullback evaluation over the last cube coordinate.
CochainComplex cube_holim_recursive(const PuncturedCubeDiagram& d);
/// Computes both strategies, checks cohomology agreement in every degree
/// (throws std::logic_error on disagreement), returns the direct model.
CochainComplex cube_holim(const PuncturedCubeDiagram& d);

}  // namespace sseq
