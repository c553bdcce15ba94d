#pragma once

#include <string>

#include "sseq/decalage.hpp"

namespace sseq {

/// Cohomology of a finite group computed through the cosimplicial machinery:
/// integral coefficients via the Moore complex of the cobar object, torsion
/// coefficients via Tot of the normalized bicomplex of the two-term
/// coefficient resolution. Faithful degrees: k <= top-1 (integral),
/// k <= top-2 (torsion); `h` holds exactly those.
struct GroupCohomologyResult {
    std::string group, coeff;
    std::vector<InvariantFactors> h;  // h[k] = H^k

    std::string render() const;
};

/// group in {C2, C3, C4, C2xC2}; coeff "Z" or "Z/m" (m >= 2);
/// throws std::invalid_argument on unknown names or top < 2.
GroupCohomologyResult group_cohomology_demo(const std::string& group, const std::string& coeff, int top);

/// The two-term bicomplex Z --x2--> Z in bidegrees (0,0), (1,0).
DoubleComplex worked_bicomplex();

/// Walks the fixture through the column filtration, its pages, the decalage
/// filtration and the comparison map.
struct WorkedBicomplexResult {
    InvariantFactors e2_f;     // E_2^{1,0} of the column filtration
    InvariantFactors e1_dec;   // E_1^{0,1} of the decalage filtration
    bool gamma1_iso;
    std::string narrative;
};
WorkedBicomplexResult worked_bicomplex_demo();

}  // namespace sseq
