#include <random>

#include "doctest.h"
#include "sseq/subquotient.hpp"

using namespace sseq;

namespace {

IntMatrix random_unimodular(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> coef(-2, 2), idx(0, n - 1);
    IntMatrix u = IntMatrix::identity(n);
    for (int step = 0; step < 3 * n; ++step) {
        int i = idx(rng), j = idx(rng);
        if (i != j) u.addmul_col(i, j, Int(coef(rng)));
    }
    return u;
}

}  // namespace

TEST_CASE("invariants of Z/2 presented as Z over 2Z") {
    Subquotient s(Lattice::full(1), Lattice::from_generators(IntMatrix(1, 1, {2})));
    InvariantFactors inv = invariants(s);
    CHECK(inv.free_rank == 0);
    REQUIRE(inv.torsion.size() == 1);
    CHECK(inv.torsion[0] == 2);
    CHECK(inv.to_string() == "Z/2");
}

TEST_CASE("invariants of Z^2 over the image of diag(1,6)") {
    Subquotient s(Lattice::full(2), Lattice::from_generators(IntMatrix(2, 2, {1, 0, 0, 6})));
    InvariantFactors inv = invariants(s);
    CHECK(inv.free_rank == 0);
    REQUIRE(inv.torsion.size() == 1);
    CHECK(inv.torsion[0] == 6);
}

TEST_CASE("free part survives: Z^3 over a rank-1 sublattice") {
    Subquotient s(Lattice::full(3), Lattice::from_generators(IntMatrix(3, 1, {3, 0, 0})));
    InvariantFactors inv = invariants(s);
    CHECK(inv.free_rank == 2);
    REQUIRE(inv.torsion.size() == 1);
    CHECK(inv.torsion[0] == 3);
    CHECK(inv.to_string() == "Z^2 + Z/3");
}

TEST_CASE("invariants are preserved under unimodular change of ambient basis") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> entry(-4, 4), nc(0, 4);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix bnd(4, nc(rng));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < bnd.cols(); ++j) bnd.at(i, j) = entry(rng);
        Subquotient s(Lattice::full(4), Lattice::from_generators(bnd));
        IntMatrix u = random_unimodular(rng, 4);
        Subquotient t(Lattice::from_generators(u), Lattice::from_generators(u * bnd));
        CHECK(invariants(s) == invariants(t));
    }
}

TEST_CASE("Subquotient rejects boundaries outside the cycles") {
    Lattice cyc = Lattice::from_generators(IntMatrix(2, 1, {2, 0}));
    CHECK_THROWS_WITH_AS(Subquotient(cyc, Lattice::full(2)),
                         "Subquotient: boundaries not contained in cycles", std::invalid_argument);
}

TEST_CASE("induced map oracle: multiplication by 2 on Z/4 has kernel and cokernel Z/2") {
    Subquotient z4(Lattice::full(1), Lattice::from_generators(IntMatrix(1, 1, {4})));
    SubquotientHom f = induced_hom(IntMatrix(1, 1, {2}), z4, z4);
    InvariantFactors z2{0, {Int(2)}};
    CHECK(hom_kernel_invariants(f) == z2);
    CHECK(hom_cokernel_invariants(f) == z2);
    CHECK_FALSE(is_iso(f));
    CHECK(hom_rank(f) == 0);
}

TEST_CASE("identity induces an isomorphism; homs equal up to boundaries") {
    Subquotient s(Lattice::full(2), Lattice::from_generators(IntMatrix(2, 1, {0, 3})));
    SubquotientHom id = induced_hom(IntMatrix::identity(2), s, s);
    CHECK(is_iso(id));
    CHECK(hom_rank(id) == 1);
    // adding a boundary-valued map does not change the induced hom
    SubquotientHom shifted = induced_hom(IntMatrix::identity(2) + IntMatrix(2, 2, {0, 0, 0, 3}), s, s);
    CHECK(homs_equal(id, shifted));
    SubquotientHom doubled = induced_hom(IntMatrix::identity(2).scaled(Int(2)), s, s);
    CHECK_FALSE(homs_equal(id, doubled));
}

TEST_CASE("induced_hom rejects maps violating the containments") {
    Subquotient dom(Lattice::full(1), Lattice::zero(1));
    Subquotient cod(Lattice::from_generators(IntMatrix(1, 1, {2})), Lattice::zero(1));
    // 1 does not land in 2Z
    CHECK_THROWS_WITH_AS(induced_hom(IntMatrix::identity(1), dom, cod),
                         "induced_hom: cycles not mapped into cycles", std::invalid_argument);
    // cycles land in cycles but boundaries leak
    Subquotient dom2(Lattice::full(1), Lattice::from_generators(IntMatrix(1, 1, {2})));
    Subquotient cod2(Lattice::full(1), Lattice::from_generators(IntMatrix(1, 1, {8})));
    CHECK_THROWS_WITH_AS(induced_hom(IntMatrix(1, 1, {2}), dom2, cod2),
                         "induced_hom: boundaries not mapped into boundaries", std::invalid_argument);
    CHECK_THROWS_AS(induced_hom(IntMatrix(2, 2), dom, cod), std::invalid_argument);
}
