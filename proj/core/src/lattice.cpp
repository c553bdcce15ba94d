#include "sseq/lattice.hpp"

#include <stdexcept>

namespace sseq {

namespace {

// Drop trailing zero columns of a column-HNF matrix.
IntMatrix strip_zero_cols(const IntMatrix& h) {
    int n = h.cols();
    while (n > 0) {
        bool zero = true;
        for (int i = 0; i < h.rows() && zero; ++i)
            if (h.at(i, n - 1) != 0) zero = false;
        if (!zero) break;
        --n;
    }
    return h.cols_range(0, n);
}

}  // namespace

Lattice Lattice::from_generators(const IntMatrix& gens) {
    return Lattice(gens.rows(), strip_zero_cols(hnf(gens).h));
}

bool Lattice::contains(const IntMatrix& vectors) const {
    if (vectors.rows() != ambient_) throw std::invalid_argument("Lattice::contains: ambient mismatch");
    return solve_columns(basis_, vectors).has_value();
}

bool Lattice::contains(const Lattice& other) const { return contains(other.basis()); }

Lattice kernel_lattice(const IntMatrix& m) {
    HnfResult hr = hnf_echelon(m);
    int r = 0;  // rank = number of nonzero columns of h
    for (int j = 0; j < hr.h.cols(); ++j) {
        bool zero = true;
        for (int i = 0; i < hr.h.rows() && zero; ++i)
            if (hr.h.at(i, j) != 0) zero = false;
        if (!zero) ++r;
    }
    return Lattice::from_generators(hr.u.cols_range(r, m.cols() - r));
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
    if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("lattice_intersect: ambient mismatch");
    if (a.is_zero() || b.is_zero()) return Lattice::zero(a.ambient_rank());
    // x in A cap B  <=>  x = A s = B t; solve [A | -B] (s,t)^T = 0.
    Lattice ker = kernel_lattice(a.basis().hstack(-b.basis()));
    IntMatrix s = ker.basis().submatrix(0, 0, a.rank(), ker.rank());
    return Lattice::from_generators(a.basis() * s);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("lattice_sum: ambient mismatch");
    return Lattice::from_generators(a.basis().hstack(b.basis()));
}

Lattice lattice_preimage(const IntMatrix& m, const Lattice& l) {
    if (m.rows() != l.ambient_rank()) throw std::invalid_argument("lattice_preimage: ambient mismatch");
    if (l.is_zero()) return kernel_lattice(m);
    // m x = L t  <=>  [m | -L] (x,t)^T = 0
    Lattice ker = kernel_lattice(m.hstack(-l.basis()));
    return Lattice::from_generators(ker.basis().submatrix(0, 0, m.cols(), ker.rank()));
}

Lattice lattice_image(const IntMatrix& m, const Lattice& l) {
    if (m.cols() != l.ambient_rank()) throw std::invalid_argument("lattice_image: ambient mismatch");
    return Lattice::from_generators(m * l.basis());
}

}  // namespace sseq
