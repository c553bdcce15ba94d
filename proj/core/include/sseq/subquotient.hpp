#pragma once

#include "sseq/lattice.hpp"

namespace sseq {

/// Isomorphism type of a finitely generated abelian group: Z^free_rank plus
/// cyclic torsion factors d1 | d2 | ... (each > 1).
struct InvariantFactors {
    int free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const InvariantFactors& o) const = default;
    std::string to_string() const;
};

/// Z/B for sublattices B <= Z of a common ambient Z^n.
class Subquotient {
public:
    Subquotient(Lattice cycles, Lattice boundaries);

    int ambient_rank() const { return cycles_.ambient_rank(); }
    const Lattice& cycles() const { return cycles_; }
    const Lattice& boundaries() const { return boundaries_; }
    bool operator==(const Subquotient& o) const = default;

private:
    Lattice cycles_;
    Lattice boundaries_;
};

InvariantFactors invariants(const Subquotient& s);

/// Map between subquotients induced by an ambient matrix: requires
/// matrix * cycles(dom) <= cycles(cod) and matrix * boundaries(dom) <= boundaries(cod).
struct SubquotientHom {
    Subquotient dom;
    Subquotient cod;
    IntMatrix matrix;  // cod.ambient_rank() x dom.ambient_rank()
};

/// Checks the containments and builds the hom; throws std::invalid_argument on violation.
SubquotientHom induced_hom(const IntMatrix& matrix, const Subquotient& dom, const Subquotient& cod);

InvariantFactors hom_kernel_invariants(const SubquotientHom& f);
InvariantFactors hom_cokernel_invariants(const SubquotientHom& f);
bool is_iso(const SubquotientHom& f);
/// Whether two homs with identical dom/cod agree as maps of subquotients.
bool homs_equal(const SubquotientHom& f, const SubquotientHom& g);

/// Rank of the induced map after killing torsion (used for page d-rank reports).
int hom_rank(const SubquotientHom& f);

}  // namespace sseq
