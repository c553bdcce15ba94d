#include "doctest.h"
#include "sseq/decalage.hpp"

using namespace sseq;

namespace {

CosimplicialAbGroup constant_object(int top) {
    std::vector<int> ranks(top + 1, 1);
    std::vector<std::vector<IntMatrix>> coface(top + 1), codeg(top + 1);
    for (int n = 1; n <= top; ++n) coface[n].assign(n + 1, IntMatrix::identity(1));
    for (int n = 0; n < top; ++n) codeg[n].assign(n + 1, IntMatrix::identity(1));
    return CosimplicialAbGroup(top, std::move(ranks), std::move(coface), std::move(codeg));
}

}  // namespace

TEST_CASE("holim over the punctured cube of a constant diagram is a single Z") {
    CosimplicialComplex cc = to_complexes(constant_object(3));
    for (int n = 0; n <= 3; ++n) {
        CochainComplex h = cube_holim(cube_from_cosimplicial(cc, n));
        CHECK(invariants(cohomology(h, 0)) == InvariantFactors{1});
        for (int k = h.lo(); k <= h.hi(); ++k)
            if (k != 0) CHECK(invariants(cohomology(h, k)).is_trivial());
    }
}

TEST_CASE("both holim strategies agree degreewise on random instances") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
        CosimplicialComplex cc = random_cosimplicial_instance(seed, 3);
        for (int n = 0; n <= cc.top(); ++n) {
            PuncturedCubeDiagram d = cube_from_cosimplicial(cc, n);
            CochainComplex direct = cube_holim_direct(d);
            CochainComplex rec = cube_holim_recursive(d);
            int lo = std::min(direct.lo(), rec.lo()), hi = std::max(direct.hi(), rec.hi());
            for (int k = lo; k <= hi; ++k)
                CHECK(invariants(cohomology(direct, k)) == invariants(cohomology(rec, k)));
        }
    }
}

TEST_CASE("cube law: holim cohomology equals truncated-totalization cohomology") {
    for (std::uint64_t seed : {5ull, 6ull}) {
        CosimplicialComplex cc = random_cosimplicial_instance(seed, 3);
        for (int n = 0; n <= cc.top(); ++n) {
            CochainComplex hol = cube_holim(cube_from_cosimplicial(cc, n));
            CochainComplex tot = total_complex(truncate_columns(to_double(cc), n));
            int lo = std::min(hol.lo(), tot.lo()), hi = std::max(hol.hi(), tot.hi());
            for (int k = lo; k <= hi; ++k)
                CHECK(invariants(cohomology(hol, k)) == invariants(cohomology(tot, k)));
        }
    }
}

TEST_CASE("cube diagrams reject missing values, bad pairs and broken functoriality") {
    CosimplicialComplex cc = to_complexes(constant_object(2));
    PuncturedCubeDiagram good = cube_from_cosimplicial(cc, 1);
    // missing value for one subset
    std::map<unsigned, CochainComplex> values;
    for (unsigned i = 1; i <= 3; ++i)
        if (i != 2) values.insert({i, good.value(i)});
    CHECK_THROWS_AS(PuncturedCubeDiagram(1, values, {}), std::invalid_argument);
    // non-nested subset pair
    std::map<unsigned, CochainComplex> all;
    for (unsigned i = 1; i <= 3; ++i) all.insert({i, good.value(i)});
    std::map<std::pair<unsigned, unsigned>, ChainMap> bad_pair{{{1, 2}, identity_chain_map(good.value(1))}};
    CHECK_THROWS_AS(PuncturedCubeDiagram(1, all, bad_pair), std::invalid_argument);
    // functoriality violation in a 2-cube: scale one edge by 2
    PuncturedCubeDiagram base = cube_from_cosimplicial(cc, 2);
    std::map<unsigned, CochainComplex> v2;
    std::map<std::pair<unsigned, unsigned>, ChainMap> m2;
    for (unsigned i = 1; i <= base.full_mask(); ++i) v2.insert({i, base.value(i)});
    for (unsigned i = 1; i <= base.full_mask(); ++i)
        for (unsigned j = 1; j <= base.full_mask(); ++j)
            if (i != j && (i & j) == i) m2.insert({{i, j}, base.map(i, j)});
    ChainMap& edge = m2.at({1, 3});
    for (IntMatrix& m : edge.maps) m = m.scaled(Int(2));
    CHECK_THROWS_WITH_AS(PuncturedCubeDiagram(2, std::move(v2), std::move(m2)),
                         doctest::Contains("functoriality"), std::invalid_argument);
}
