// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: sseq_acceptance <path-to-sseq-cli>

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sseq/demos.hpp"
#include "sseq/model_io.hpp"

using namespace sseq;
using clock_type = std::chrono::steady_clock;

namespace {

constexpr int kInstances = 200;
const SizeParams kLarge{6, 4, 5, 3};

int failures = 0;

void report(int criterion, bool pass, const std::string& what, double secs) {
    std::cout << "criterion " << criterion << ": " << (pass ? "pass" : "FAIL") << " - " << what << " ("
              << std::fixed << std::setprecision(2) << secs << "s)\n";
    if (!pass) ++failures;
}

template <typename Fn>
void criterion(int n, const std::string& what, Fn&& body) {
    auto t0 = clock_type::now();
    bool pass = false;
    std::string detail;
    try {
        pass = body();
    } catch (const std::exception& e) {
        detail = std::string(" [") + e.what() + "]";
    }
    double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
    report(n, pass, what + detail, secs);
}

bool pages_agree(const std::vector<Page>& a, const std::vector<Page>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        for (const auto& [pq, e] : a[i].entries) {
            auto it = b[i].entries.find(pq);
            InvariantFactors other = it == b[i].entries.end() ? InvariantFactors{} : invariants(it->second);
            if (!(invariants(e) == other)) return false;
        }
        for (const auto& [pq, d] : a[i].differentials) {
            auto it = b[i].differentials.find(pq);
            int other_rank = it == b[i].differentials.end() ? 0 : hom_rank(it->second);
            if (hom_rank(d) != other_rank) return false;
            if (it != b[i].differentials.end() &&
                !(hom_kernel_invariants(d) == hom_kernel_invariants(it->second)))
                return false;
        }
    }
    return true;
}

int run(const std::string& cmd) {
    int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

InvariantFactors cyclic_oracle(int m, int k) {
    if (k == 0) return InvariantFactors{1};
    if (k % 2 == 0) return InvariantFactors{0, {Int(m)}};
    return InvariantFactors{};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: sseq_acceptance <path-to-sseq-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    criterion(1, "comparison maps iso and d-commuting on 200 random filtered complexes", [] {
        for (std::uint64_t s = 1; s <= kInstances; ++s) {
            FilteredComplex f = random_filtered_instance(s, kLarge);
            ComparisonReport rep = verify_comparison(f, f.width() + 2);
            if (!rep.pass || rep.items.empty()) return false;
        }
        return true;
    });

    criterion(2, "shifted filtration of a bicomplex equals the blockwise construction, 200 instances", [] {
        for (std::uint64_t s = 1; s <= kInstances; ++s) {
            DoubleComplex k = random_double_complex(s, kLarge);
            if (!filtrations_equal(dec(stupid_filtration(k)), dec_double(k))) return false;
        }
        return true;
    });

    criterion(3, "lattice-formula pages equal exact-couple pages on all instances", [] {
        for (std::uint64_t s = 1; s <= kInstances; ++s) {
            FilteredComplex f = random_filtered_instance(s, kLarge);
            int rm = default_r_max(f);
            if (!pages_agree(pages(f, rm), pages_from_couple(f, rm))) return false;
        }
        return true;
    });

    criterion(4, "stabilized pages equal the abutment graded pieces; index <= width+1", [] {
        for (std::uint64_t s = 1; s <= kInstances; ++s) {
            FilteredComplex f = random_filtered_instance(s, kLarge);
            int rm = default_r_max(f);
            for (const auto& [n, r] : stabilization_index(f))
                if (r > f.width() + 1) return false;
            for (const auto& [pn, inv] : abutment_graded(f)) {
                auto [p, n] = pn;
                if (!(invariants(page_entry(f, rm, p, n - p)) == inv)) return false;
            }
        }
        return true;
    });

    criterion(5, "worked two-term bicomplex fixture", [] {
        WorkedBicomplexResult res = worked_bicomplex_demo();
        InvariantFactors z2{0, {Int(2)}};
        return res.e2_f == z2 && res.e1_dec == z2 && res.gamma1_iso;
    });

    criterion(6, "cosimplicial laws (normalized/Moore, layers, cubes) on 100 instances + demos", [] {
        for (std::uint64_t s = 1; s <= 100; ++s) {
            CosimplicialComplex cc = random_cosimplicial_instance(s, 2 + (int)(s % 2));
            DoubleComplex dc = to_double(cc);
            for (int n = 0; n <= cc.top(); ++n) {
                CochainComplex tot = total_complex(truncate_columns(dc, n));
                CochainComplex hol = cube_holim(cube_from_cosimplicial(cc, n));
                int lo = std::min(tot.lo(), hol.lo()), hi = std::max(tot.hi(), hol.hi());
                for (int k = lo; k <= hi; ++k)
                    if (!(invariants(cohomology(tot, k)) == invariants(cohomology(hol, k)))) return false;
                // layer law: H^k(layer n) = H^{k-n} of the normalized column
                CochainComplex layer = tot_layer(cc, n);
                std::vector<int> ranks;
                std::vector<IntMatrix> diffs;
                for (int b = dc.bmin(); b <= dc.bmax(); ++b) {
                    ranks.push_back(dc.rank(n, b));
                    diffs.push_back(dc.d2(n, b));
                }
                CochainComplex column(dc.bmin(), dc.bmax(), std::move(ranks), std::move(diffs));
                for (int k = layer.lo(); k <= layer.hi(); ++k)
                    if (!(invariants(cohomology(layer, k)) == invariants(cohomology(column, k - n)))) return false;
            }
        }
        for (const char* g : {"C2", "C3", "C4", "C2xC2"}) {
            CosimplicialAbGroup bar =
                bar_cosimplicial(std::string(g) == "C2xC2" ? product_group(cyclic_group(2), cyclic_group(2))
                                 : cyclic_group(g[1] - '0'),
                                 1, 4);
            CochainComplex nc = normalized_complex(bar), mc = moore_complex(bar);
            for (int k = 0; k < 4; ++k)
                if (!(invariants(cohomology(nc, k)) == invariants(cohomology(mc, k)))) return false;
        }
        return true;
    });

    criterion(7, "group cohomology demos vs periodic-resolution and Kuenneth oracles", [] {
        for (int m : {2, 3, 4}) {
            GroupCohomologyResult res = group_cohomology_demo("C" + std::to_string(m), "Z", 6);
            if (res.h.size() != 6) return false;
            for (int k = 0; k <= 5; ++k)
                if (!(res.h[k] == cyclic_oracle(m, k))) return false;
        }
        GroupCohomologyResult res = group_cohomology_demo("C2xC2", "Z/2", 6);
        if (res.h.size() != 5) return false;
        for (int k = 0; k <= 4; ++k) {
            if (res.h[k].free_rank != 0 || (int)res.h[k].torsion.size() != k + 1) return false;
            for (const Int& t : res.h[k].torsion)
                if (t != 2) return false;
        }
        return true;
    });

    criterion(8, "index map composition on the grid |p|,|q| <= 20, r <= 10", [] {
        for (int p = -20; p <= 20; ++p)
            for (int q = -20; q <= 20; ++q)
                for (int r = 1; r <= 10; ++r) {
                    Tri a = reindex(IndexMapId::AH_TO_DEC, p, q, r);
                    Tri b = reindex(IndexMapId::DEC_REINDEX, a.p, a.q, a.r);
                    Tri c = reindex(IndexMapId::CE_TO_BK, b.p, b.q, b.r);
                    if (!(reindex(IndexMapId::AH_TO_AN, p, q, r) == c)) return false;
                    if (r == 1 && !(c == Tri{3 * p + q, 2 * p, 3})) return false;
                }
        return true;
    });

    criterion(9, "truncation tower pages match shifted-filtration pages, 50 instances + demos", [] {
        for (std::uint64_t s = 1; s <= 50; ++s) {
            ComparisonReport rep = verify_postnikov_tot(random_cosimplicial_instance(s, 3), 4);
            if (!rep.pass) return false;
        }
        for (int m : {2, 3}) {
            ComparisonReport rep = verify_postnikov_tot(to_complexes(bar_cosimplicial(cyclic_group(m), 1, 3)), 4);
            if (!rep.pass) return false;
        }
        return true;
    });

    criterion(10, "corrupted inputs and injected faults exit 1/2 with diagnostics", [&cli] {
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path() / "sseq_acceptance";
        fs::create_directories(dir);
        fs::path good = dir / "good.json", bad = dir / "bad.json", syntax = dir / "syntax.json";
        std::ofstream(good) << model_json(worked_bicomplex()).dump();
        std::ofstream(bad) << R"({"schema":1,"type":"filtered_complex","lo":0,"hi":2,"pmin":0,"pmax":1,)"
                           << R"("ranks":{"0":1,"1":1,"2":1},"d":{"0":["1"],"1":["1"]},"filt":{}})";
        std::ofstream(syntax) << "{ not json";
        bool ok = run(cli + " pages " + good.string()) == 0;
        ok = ok && run(cli + " pages " + bad.string()) == 2;
        ok = ok && run(cli + " pages " + syntax.string()) == 2;
        ok = ok && run(cli + " pages " + (dir / "missing.json").string()) == 2;
        ok = ok && run(cli + " decalage " + good.string()) == 0;
        ok = ok && run(cli + " decalage " + good.string() + " --inject-fault") == 1;
        ok = ok && run(cli + " verify --trials 2 --inject-fault") == 1;
        ok = ok && run(cli + " demo no-such-demo") == 2;
        // the in-process loader reports a located diagnostic, not a silent pass
        try {
            load_model(bad.string());
            return false;
        } catch (const ModelError& e) {
            ok = ok && std::string(e.what()).find(':') != std::string::npos;
        }
        return ok;
    });

    std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: FAILURES present") << "\n";
    return failures == 0 ? 0 : 1;
}
