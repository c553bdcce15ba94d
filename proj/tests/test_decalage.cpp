#include "doctest.h"
#include "sseq/demos.hpp"

using namespace sseq;

TEST_CASE("worked fixture: decalage shifts the interesting entry one page earlier") {
    WorkedBicomplexResult res = worked_bicomplex_demo();
    CHECK((res.e2_f == InvariantFactors{0, {Int(2)}}));
    CHECK((res.e1_dec == InvariantFactors{0, {Int(2)}}));
    CHECK(res.gamma1_iso);
    FilteredComplex f = stupid_filtration(worked_bicomplex());
    SubquotientHom g = gamma(f, 1, 0, 1);
    CHECK(is_iso(g));
    // target indices follow (p,q) -> (2p+q, -p)
    CHECK(invariants(g.cod) == invariants(page_entry(f, 2, 1, 0)));
}

TEST_CASE("decalage of a stupid filtration equals the blockwise construction") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
        DoubleComplex k = random_double_complex(seed, SizeParams{});
        FilteredComplex a = dec(stupid_filtration(k));
        FilteredComplex b = dec_double(k);
        CHECK(filtrations_equal(a, b));
    }
}

TEST_CASE("comparison maps are isomorphisms commuting with differentials") {
    for (std::uint64_t seed : {2ull, 6ull}) {
        FilteredComplex f = random_filtered_instance(seed, SizeParams{});
        ComparisonReport rep = verify_comparison(f, default_r_max(f));
        CHECK(rep.pass);
        CHECK(rep.detail.empty());
        CHECK(!rep.items.empty());
        for (const auto& item : rep.items) {
            CHECK(item.iso);
            CHECK(item.d_commutes);
        }
    }
}

TEST_CASE("identity maps between unrelated page positions are rejected, not silently accepted") {
    FilteredComplex f = stupid_filtration(worked_bicomplex());
    // E_1^{0,0} has full cycles but E_1^{1,-1} is the zero group
    CHECK_THROWS_AS(induced_hom(IntMatrix::identity(1), page_entry(f, 1, 0, 0), page_entry(f, 1, 1, -1)),
                    std::invalid_argument);
}

TEST_CASE("index reindexing composes as advertised on the full grid") {
    for (int p = -20; p <= 20; ++p)
        for (int q = -20; q <= 20; ++q)
            for (int r = 1; r <= 10; ++r) {
                Tri a = reindex(IndexMapId::AH_TO_DEC, p, q, r);
                Tri b = reindex(IndexMapId::DEC_REINDEX, a.p, a.q, a.r);
                Tri c = reindex(IndexMapId::CE_TO_BK, b.p, b.q, b.r);
                CHECK(reindex(IndexMapId::AH_TO_AN, p, q, r) == c);
            }
    CHECK((reindex(IndexMapId::AH_TO_AN, 2, 5, 1) == Tri{3 * 2 + 5, 2 * 2, 3}));
}

TEST_CASE("postnikov tower of truncations matches the decalage pages") {
    for (std::uint64_t seed : {1ull, 3ull}) {
        CosimplicialComplex cc = random_cosimplicial_instance(seed, 3);
        ComparisonReport rep = verify_postnikov_tot(cc, 4);
        CHECK(rep.pass);
        CHECK(rep.detail.empty());
    }
}

TEST_CASE("random generators are deterministic in the seed") {
    SizeParams sp;
    CHECK(random_double_complex(77, sp) == random_double_complex(77, sp));
    CHECK(random_filtered_instance(77, sp) == random_filtered_instance(77, sp));
    CHECK_FALSE(random_double_complex(77, sp) == random_double_complex(78, sp));
}
