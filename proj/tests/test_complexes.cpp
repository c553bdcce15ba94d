#include "doctest.h"
#include "sseq/complexes.hpp"
#include "sseq/decalage.hpp"

using namespace sseq;

namespace {

// 0 -> Z --m--> Z -> 0 in degrees 0, 1
CochainComplex two_term(int m) { return CochainComplex(0, 1, {1, 1}, {IntMatrix(1, 1, {m}), IntMatrix(0, 1)}); }

}  // namespace

TEST_CASE("cohomology oracle for the two-term complex x2") {
    CochainComplex c = two_term(2);
    CHECK(invariants(cohomology(c, 0)).is_trivial());
    InvariantFactors h1 = invariants(cohomology(c, 1));
    CHECK((h1 == InvariantFactors{0, {Int(2)}}));
    CHECK(invariants(cohomology(c, 2)).is_trivial());
}

TEST_CASE("complex construction rejects d∘d != 0 and shape mismatches") {
    // d0 = d1 = identity on Z, composite is nonzero
    CHECK_THROWS_AS(CochainComplex(0, 2, {1, 1, 1},
                                   {IntMatrix::identity(1), IntMatrix::identity(1), IntMatrix(0, 1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(CochainComplex(0, 1, {1, 2}, {IntMatrix(1, 1, {0}), IntMatrix(0, 2)}),
                    std::invalid_argument);
}

TEST_CASE("shift moves degrees and preserves cohomology") {
    CochainComplex c = two_term(3);
    CochainComplex s = shift(c, 2);
    CHECK(s.lo() == -2);
    CHECK(s.hi() == -1);
    CHECK(invariants(cohomology(s, -1)) == invariants(cohomology(c, 1)));
}

TEST_CASE("mapping cone of the identity is acyclic; cone of zero splits") {
    CochainComplex c = two_term(5);
    CochainComplex cone_id = mapping_cone(identity_chain_map(c));
    for (int n = cone_id.lo() - 1; n <= cone_id.hi() + 1; ++n)
        CHECK(invariants(cohomology(cone_id, n)).is_trivial());
    // cone(0: C -> C) = C[1] ⊕ C
    CochainComplex cone_zero = mapping_cone(zero_chain_map(c, c));
    for (int n = cone_zero.lo(); n <= cone_zero.hi(); ++n) {
        InvariantFactors expect = invariants(cohomology(c, n + 1));
        InvariantFactors here = invariants(cohomology(c, n));
        InvariantFactors got = invariants(cohomology(cone_zero, n));
        CHECK(got.free_rank == expect.free_rank + here.free_rank);
        CHECK(got.torsion.size() == expect.torsion.size() + here.torsion.size());
    }
}

TEST_CASE("hofib of identity is acyclic and sits one shift below the cone") {
    CochainComplex c = two_term(2);
    CochainComplex h = hofib(identity_chain_map(c));
    for (int n = h.lo(); n <= h.hi(); ++n) CHECK(invariants(cohomology(h, n)).is_trivial());
    CHECK(h.lo() == mapping_cone(identity_chain_map(c)).lo() + 1);
}

TEST_CASE("mapping cone long-exact-sequence oracle: cone of xm on Z in one degree") {
    // cone(x6 : Z -> Z) is Z --6--> Z in degrees -1, 0, so H^0 = Z/6
    CochainComplex pt(0, 0, {1}, {IntMatrix(0, 1)});
    std::vector<IntMatrix> maps{IntMatrix(1, 1, {6})};
    CochainComplex cone = mapping_cone(make_chain_map(pt, pt, std::move(maps), 0));
    CHECK(invariants(cohomology(cone, -1)).is_trivial());
    CHECK((invariants(cohomology(cone, 0)) == InvariantFactors{0, {Int(6)}}));
}

TEST_CASE("make_chain_map rejects non-commuting squares") {
    CochainComplex c = two_term(2);
    // multiplication by 1 in degree 0 and by 2 in degree 1 does not commute with d = x2
    std::vector<IntMatrix> maps{IntMatrix::identity(1), IntMatrix(1, 1, {2})};
    CHECK_THROWS_AS(make_chain_map(c, c, std::move(maps), 0), std::invalid_argument);
}

TEST_CASE("canonical truncation keeps cohomology up to the cutoff and kills it above") {
    CochainComplex c = two_term(4);
    Truncation t = canonical_truncation(c, 0);
    CHECK(invariants(cohomology(t.complex, 0)) == invariants(cohomology(c, 0)));
    for (int n = 1; n <= c.hi() + 1; ++n) CHECK(invariants(cohomology(t.complex, n)).is_trivial());
    // the inclusion is a genuine chain map inducing the identity on H^0
    SubquotientHom incl = induced_hom(t.inclusion.f(0), cohomology(t.complex, 0), cohomology(c, 0));
    CHECK(is_iso(incl));
}

TEST_CASE("total complex of a bicomplex has a valid differential and correct ranks") {
    DoubleComplex k = random_double_complex(99, SizeParams{});
    CochainComplex tot = total_complex(k);
    for (int n = tot.lo(); n <= tot.hi(); ++n) {
        CHECK(tot.rank(n) == k.tot_rank(n));
        CHECK((tot.d(n + 1) * tot.d(n)).is_zero());
    }
}

TEST_CASE("double complex construction rejects non-commuting squares") {
    // single column pair where d1 then d2 differs from d2 then d1
    std::vector<std::vector<int>> ranks{{1, 1}, {1, 1}};
    std::vector<std::vector<IntMatrix>> d1{{IntMatrix::identity(1), IntMatrix::identity(1)},
                                           {IntMatrix(0, 1), IntMatrix(0, 1)}};
    std::vector<std::vector<IntMatrix>> d2{{IntMatrix::identity(1), IntMatrix(0, 1)},
                                           {IntMatrix(1, 1, {2}), IntMatrix(0, 1)}};
    CHECK_THROWS_AS(DoubleComplex(1, 0, 1, std::move(ranks), std::move(d1), std::move(d2)),
                    std::invalid_argument);
}

TEST_CASE("stupid filtration is nested, d-stable, full at pmin and zero at pmax") {
    DoubleComplex k = random_double_complex(3, SizeParams{});
    FilteredComplex f = stupid_filtration(k);
    const CochainComplex& c = f.complex();
    for (int n = c.lo(); n <= c.hi(); ++n) {
        CHECK(f.filt(f.pmin(), n).is_full());
        CHECK(f.filt(f.pmax(), n).is_zero());
        for (int p = f.pmin(); p < f.pmax(); ++p) {
            CHECK(f.filt(p, n).contains(f.filt(p + 1, n)));
            CHECK(f.filt(p, n + 1).contains(lattice_image(c.d(n), f.filt(p, n))));
        }
    }
}

TEST_CASE("filtered complex construction rejects broken filtrations") {
    CochainComplex c = two_term(2);
    std::vector<Lattice> full{Lattice::full(1), Lattice::full(1)};
    std::vector<Lattice> zero{Lattice::zero(1), Lattice::zero(1)};
    Lattice even = Lattice::from_generators(IntMatrix(1, 1, {2}));
    // not decreasing: F^2 = full is not contained in F^1 = 2Z
    CHECK_THROWS_AS(FilteredComplex(c, 0, 3, {full, {even, even}, full, zero}),
                    std::invalid_argument);
    // not d-stable: d(F^1 C^0) = 2Z but F^1 C^1 = 0
    CHECK_THROWS_AS(FilteredComplex(c, 0, 2, {full, {Lattice::full(1), Lattice::zero(1)}, zero}),
                    std::invalid_argument);
    // wrong step count
    CHECK_THROWS_AS(FilteredComplex(c, 0, 2, {full, zero}), std::invalid_argument);
}

TEST_CASE("filtrations_equal ignores the stored window") {
    CochainComplex c = two_term(2);
    FilteredComplex a = trivial_filtration(c);
    // same filtration function with a padded window
    std::vector<std::vector<Lattice>> filt{{Lattice::full(1), Lattice::full(1)},
                                           {Lattice::full(1), Lattice::full(1)},
                                           {Lattice::zero(1), Lattice::zero(1)}};
    FilteredComplex b(c, -1, 1, std::move(filt));
    CHECK(filtrations_equal(a, b));
    CHECK_FALSE(a == b);
    CHECK_FALSE(filtrations_equal(a, trivial_filtration(two_term(3))));
}
