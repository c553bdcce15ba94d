#pragma once

#include "sseq/int_matrix.hpp"

namespace sseq {

/// Sublattice of Z^ambient_rank, stored canonically: column HNF basis with
/// zero columns dropped and columns ordered by pivot row. Two lattices are
/// equal as subgroups iff their stored representations compare equal.
class Lattice {
public:
    Lattice() : ambient_(0), basis_(0, 0) {}

    static Lattice zero(int ambient_rank) { return Lattice(ambient_rank, IntMatrix(ambient_rank, 0)); }
    static Lattice full(int ambient_rank) { return Lattice(ambient_rank, IntMatrix::identity(ambient_rank)); }
    static Lattice from_generators(const IntMatrix& gens);

    int ambient_rank() const { return ambient_; }
    int rank() const { return basis_.cols(); }
    const IntMatrix& basis() const { return basis_; }
    bool is_zero() const { return basis_.cols() == 0; }
    bool is_full() const { return basis_.is_identity(); }

    bool contains(const IntMatrix& vectors) const;  // each column a vector
    bool contains(const Lattice& other) const;
    bool operator==(const Lattice& o) const = default;

private:
    Lattice(int ambient, IntMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

    int ambient_;
    IntMatrix basis_;
};

Lattice kernel_lattice(const IntMatrix& m);
Lattice lattice_intersect(const Lattice& a, const Lattice& b);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
/// {x : m*x in l}
Lattice lattice_preimage(const IntMatrix& m, const Lattice& l);
/// m * l, canonicalized, as a lattice in Z^{m.rows()}
Lattice lattice_image(const IntMatrix& m, const Lattice& l);

}  // namespace sseq
