#include "sseq/demos.hpp"

#include <sstream>

#include "sseq/model_io.hpp"

namespace sseq {

namespace {

FiniteGroup named_group(const std::string& name) {
    if (name == "C2") return cyclic_group(2);
    if (name == "C3") return cyclic_group(3);
    if (name == "C4") return cyclic_group(4);
    if (name == "C2xC2") return product_group(cyclic_group(2), cyclic_group(2));
    throw std::invalid_argument("unknown group \"" + name + "\" (expected C2, C3, C4 or C2xC2)");
}

// "Z" -> 0, "Z/m" -> m >= 2
int coeff_modulus(const std::string& coeff) {
    if (coeff == "Z") return 0;
    if (coeff.rfind("Z/", 0) == 0) {
        try {
            size_t used = 0;
            int m = std::stoi(coeff.substr(2), &used);
            if (used == coeff.size() - 2 && m >= 2) return m;
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument("unknown coefficients \"" + coeff + "\" (expected Z or Z/m with m >= 2)");
}

}  // namespace

std::string GroupCohomologyResult::render() const {
    std::ostringstream out;
    out << "H^k(" << group << "; " << coeff << "), k = 0.." << (h.size() - 1) << "\n";
    for (size_t k = 0; k < h.size(); ++k) out << "H^" << k << " = " << h[k].to_string() << "\n";
    return out.str();
}

GroupCohomologyResult group_cohomology_demo(const std::string& group, const std::string& coeff, int top) {
    if (top < 2) throw std::invalid_argument("top must be at least 2");
    FiniteGroup g = named_group(group);
    int m = coeff_modulus(coeff);
    GroupCohomologyResult res{group, coeff, {}};
    CochainComplex mc = moore_complex(bar_cosimplicial(g, 1, top));
    if (m == 0) {
        for (int k = 0; k <= top - 1; ++k) res.h.push_back(invariants(cohomology(mc, k)));
    } else {
        // Tot of the two-term coefficient resolution Z --xm--> Z collapses to the
        // mapping cone of xm on the integral complex (Bockstein sequence).
        std::vector<IntMatrix> maps;
        for (int k = mc.lo(); k <= mc.hi(); ++k) maps.push_back(IntMatrix::identity(mc.rank(k)).scaled(Int(m)));
        CochainComplex cone = mapping_cone(make_chain_map(mc, mc, std::move(maps), mc.lo()));
        for (int k = 0; k <= top - 2; ++k) res.h.push_back(invariants(cohomology(cone, k)));
    }
    return res;
}

DoubleComplex worked_bicomplex() {
    std::vector<std::vector<int>> ranks{{1}, {1}};
    std::vector<std::vector<IntMatrix>> d1, d2;
    d1.push_back({IntMatrix(1, 1, {2})});
    d1.push_back({IntMatrix(0, 1)});
    d2.push_back({IntMatrix(0, 1)});
    d2.push_back({IntMatrix(0, 1)});
    return DoubleComplex(1, 0, 0, std::move(ranks), std::move(d1), std::move(d2));
}

WorkedBicomplexResult worked_bicomplex_demo() {
    DoubleComplex k = worked_bicomplex();
    FilteredComplex f = stupid_filtration(k);
    FilteredComplex decf = dec(f);
    WorkedBicomplexResult res;
    res.e2_f = invariants(page_entry(f, 2, 1, 0));
    res.e1_dec = invariants(page_entry(decf, 1, 0, 1));
    res.gamma1_iso = is_iso(gamma(f, 1, 0, 1));
    std::ostringstream out;
    out << "Fixture: bicomplex K with K^{0,0} = Z --x2--> K^{1,0} = Z.\n\n";
    out << "Column filtration F, pages 1..3:\n" << render_tsv(make_page_table(f, 3, Convention::CE));
    out << "\nDecalage Dec F, pages 1..3:\n" << render_tsv(make_page_table(decf, 3, Convention::CE));
    out << "\nE_2^{1,0}(F) = " << res.e2_f.to_string() << "\n";
    out << "E_1^{0,1}(Dec F) = " << res.e1_dec.to_string() << "\n";
    out << "gamma_1: E_1^{0,1}(Dec F) -> E_2^{1,0}(F) is "
        << (res.gamma1_iso ? "an isomorphism" : "NOT an isomorphism") << "\n";
    res.narrative = out.str();
    return res;
}

}  // namespace sseq
