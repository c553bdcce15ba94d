#include "sseq/subquotient.hpp"

#include <sstream>
#include <stdexcept>

namespace sseq {

std::string InvariantFactors::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << (free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank));
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

Subquotient::Subquotient(Lattice cycles, Lattice boundaries)
    : cycles_(std::move(cycles)), boundaries_(std::move(boundaries)) {
    if (cycles_.ambient_rank() != boundaries_.ambient_rank())
        throw std::invalid_argument("Subquotient: ambient mismatch");
    if (!cycles_.contains(boundaries_))
        throw std::invalid_argument("Subquotient: boundaries not contained in cycles");
}

InvariantFactors invariants(const Subquotient& s) {
    // Express boundaries in the cycle basis and read off the Smith form.
    auto x = solve_columns(s.cycles().basis(), s.boundaries().basis());
    if (!x) throw std::logic_error("invariants: boundary expression failed");
    SnfResult sr = snf(*x);
    InvariantFactors inv;
    int rank_x = 0;
    for (int t = 0; t < std::min(sr.d.rows(), sr.d.cols()); ++t) {
        const Int& d = sr.d.at(t, t);
        if (d == 0) break;
        ++rank_x;
        if (d > 1) inv.torsion.push_back(d);
    }
    inv.free_rank = s.cycles().rank() - rank_x;
    return inv;
}

SubquotientHom induced_hom(const IntMatrix& matrix, const Subquotient& dom, const Subquotient& cod) {
    if (matrix.cols() != dom.ambient_rank() || matrix.rows() != cod.ambient_rank())
        throw std::invalid_argument("induced_hom: matrix shape mismatch");
    if (!cod.cycles().contains(matrix * dom.cycles().basis()))
        throw std::invalid_argument("induced_hom: cycles not mapped into cycles");
    if (!cod.boundaries().contains(matrix * dom.boundaries().basis()))
        throw std::invalid_argument("induced_hom: boundaries not mapped into boundaries");
    return SubquotientHom{dom, cod, matrix};
}

InvariantFactors hom_kernel_invariants(const SubquotientHom& f) {
    Lattice ker = lattice_intersect(f.dom.cycles(), lattice_preimage(f.matrix, f.cod.boundaries()));
    return invariants(Subquotient(ker, f.dom.boundaries()));
}

InvariantFactors hom_cokernel_invariants(const SubquotientHom& f) {
    Lattice im = lattice_sum(lattice_image(f.matrix, f.dom.cycles()), f.cod.boundaries());
    return invariants(Subquotient(f.cod.cycles(), im));
}

bool is_iso(const SubquotientHom& f) {
    return hom_kernel_invariants(f).is_trivial() && hom_cokernel_invariants(f).is_trivial();
}

bool homs_equal(const SubquotientHom& f, const SubquotientHom& g) {
    if (!(f.dom == g.dom) || !(f.cod == g.cod)) return false;
    return f.cod.boundaries().contains((f.matrix - g.matrix) * f.dom.cycles().basis());
}

int hom_rank(const SubquotientHom& f) {
    Lattice im = lattice_sum(lattice_image(f.matrix, f.dom.cycles()), f.cod.boundaries());
    return invariants(Subquotient(im, f.cod.boundaries())).free_rank;
}

}  // namespace sseq
