#include <iostream>

#include "CLI11.hpp"
#include "sseq/demos.hpp"
#include "sseq/model_io.hpp"

namespace {

using namespace sseq;

constexpr int kExitInvalidInput = 2;
constexpr int kExitVerificationFailure = 1;

FilteredComplex load_filtered(const std::string& path) {
    Model m = load_model(path);
    if (m.kind == ModelKind::Filtered) return *m.filtered;
    if (m.kind == ModelKind::Double) return stupid_filtration(*m.double_cx);
    throw ModelError(path + ": expected a filtered_complex or double_complex model");
}

CosimplicialComplex load_cosimplicial(const std::string& path) {
    Model m = load_model(path);
    if (m.kind == ModelKind::Cosimplicial) return *m.cos_cx;
    if (m.kind == ModelKind::CosimplicialAbelian) return to_complexes(*m.cos_ab);
    throw ModelError(path + ": expected a cosimplicial_abelian or cosimplicial_complex model");
}

int cmd_pages(const std::string& path, int r_max, const std::string& convention, const std::string& format) {
    FilteredComplex f = load_filtered(path);
    if (r_max <= 0) r_max = default_r_max(f);
    PageTable t = make_page_table(f, r_max, convention == "bk" ? Convention::BK : Convention::CE);
    if (format == "json")
        std::cout << render_json(t).dump(2) << "\n";
    else
        std::cout << render_tsv(t);
    return 0;
}

int cmd_decalage(const std::string& path, int r_max, bool inject_fault) {
    FilteredComplex f = load_filtered(path);
    if (r_max <= 0) r_max = default_r_max(f);
    ComparisonReport rep = verify_comparison(f, r_max);
    if (inject_fault) {
        rep.pass = false;
        rep.detail = "injected fault";
    }
    std::cout << report_json(rep).dump(2) << "\n";
    return rep.pass ? 0 : kExitVerificationFailure;
}

void print_cohomology_table(const CochainComplex& c, int lo, int hi) {
    std::cout << "k\tH^k\n";
    for (int k = lo; k <= hi; ++k) std::cout << k << "\t" << invariants(cohomology(c, k)).to_string() << "\n";
}

int cmd_tot(const std::string& path, int n) {
    CosimplicialComplex cc = load_cosimplicial(path);
    if (n < 0 || n > cc.top()) throw ModelError("--n must lie in [0, top]");
    int bmin = cc.level(0).lo(), bmax = cc.level(0).hi();
    CochainComplex tot = total_complex(truncate_columns(to_double(cc), n));
    print_cohomology_table(tot, bmin, n + bmax);
    return 0;
}

int cmd_cube(const std::string& path, int n) {
    CosimplicialComplex cc = load_cosimplicial(path);
    if (n < 0 || n > cc.top()) throw ModelError("--n must lie in [0, top]");
    int bmin = cc.level(0).lo(), bmax = cc.level(0).hi();
    CochainComplex holim = cube_holim(cube_from_cosimplicial(cc, n));
    print_cohomology_table(holim, bmin, n + bmax);
    return 0;
}

SizeParams size_params(const std::string& size) {
    if (size == "small") return SizeParams{4, 3, 5, 3};
    if (size == "medium") return SizeParams{5, 3, 5, 3};
    if (size == "large") return SizeParams{6, 4, 5, 3};
    throw ModelError("unknown --size \"" + size + "\" (expected small, medium or large)");
}

int cmd_verify(std::uint64_t seed, int trials, const std::string& size, int r_max, bool inject_fault) {
    SizeParams sp = size_params(size);
    bool all_pass = true;
    for (int t = 0; t < trials; ++t) {
        std::uint64_t s = seed + (std::uint64_t)t;
        FilteredComplex f = random_filtered_instance(s, sp);
        int rm = r_max > 0 ? r_max : default_r_max(f);
        ComparisonReport rep = verify_comparison(f, rm);
        bool remark = filtrations_equal(dec(stupid_filtration(random_double_complex(s, sp))),
                                        dec_double(random_double_complex(s, sp)));
        bool ok = rep.pass && remark;
        if (inject_fault && t == 0) {
            ok = false;
            rep.detail = "injected fault";
        }
        std::cout << "trial " << t << " seed " << s << ": " << (ok ? "pass" : "FAIL") << " ("
                  << rep.items.size() << " positions";
        if (!ok) std::cout << "; " << (rep.detail.empty() ? "decalage identity mismatch" : rep.detail);
        std::cout << ")\n";
        all_pass = all_pass && ok;
    }
    std::cout << (all_pass ? "all trials passed" : "FAILURES present") << "\n";
    return all_pass ? 0 : kExitVerificationFailure;
}

int cmd_demo(const std::string& name, const std::string& group, const std::string& coeff, int top) {
    if (name == "group-cohomology") {
        std::cout << group_cohomology_demo(group, coeff, top).render();
        return 0;
    }
    if (name == "worked-bicomplex") {
        WorkedBicomplexResult res = worked_bicomplex_demo();
        std::cout << res.narrative;
        return res.gamma1_iso ? 0 : kExitVerificationFailure;
    }
    std::cerr << "unknown demo \"" << name << "\" (expected group-cohomology or worked-bicomplex)\n";
    return kExitInvalidInput;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectral-sequence engine over the integers"};
    app.require_subcommand(1);

    std::string input, convention = "ce", format = "tsv", size = "small";
    std::string demo_name, demo_group = "C2", demo_coeff = "Z";
    int r_max = 0, n = 0, trials = 20, demo_top = 5;
    std::uint64_t seed = 42;
    bool inject_fault = false;

    auto* pages_cmd = app.add_subcommand("pages", "Page table of a filtered or double complex");
    pages_cmd->add_option("input", input)->required();
    pages_cmd->add_option("--r-max", r_max);
    pages_cmd->add_option("--convention", convention)->check(CLI::IsMember({"ce", "bk"}));
    pages_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    auto* dec_cmd = app.add_subcommand("decalage", "Check the decalage page comparison");
    dec_cmd->add_option("input", input)->required();
    dec_cmd->add_option("--r-max", r_max);
    dec_cmd->add_flag("--inject-fault", inject_fault)->group("");

    auto* tot_cmd = app.add_subcommand("tot", "Cohomology of the column-truncated totalization");
    tot_cmd->add_option("input", input)->required();
    tot_cmd->add_option("--n", n)->required();

    auto* cube_cmd = app.add_subcommand("cube", "Cohomology of the punctured-cube homotopy limit");
    cube_cmd->add_option("input", input)->required();
    cube_cmd->add_option("--n", n)->required();

    auto* demo_cmd = app.add_subcommand("demo", "Worked examples");
    demo_cmd->add_option("name", demo_name)->required();
    demo_cmd->add_option("--group", demo_group);
    demo_cmd->add_option("--coeff", demo_coeff);
    demo_cmd->add_option("--top", demo_top);

    auto* verify_cmd = app.add_subcommand("verify", "Randomized property suite");
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_option("--size", size);
    verify_cmd->add_option("--r-max", r_max);
    verify_cmd->add_flag("--inject-fault", inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidInput;
    }

    try {
        if (pages_cmd->parsed()) return cmd_pages(input, r_max, convention, format);
        if (dec_cmd->parsed()) return cmd_decalage(input, r_max, inject_fault);
        if (tot_cmd->parsed()) return cmd_tot(input, n);
        if (cube_cmd->parsed()) return cmd_cube(input, n);
        if (demo_cmd->parsed()) return cmd_demo(demo_name, demo_group, demo_coeff, demo_top);
        if (verify_cmd->parsed()) return cmd_verify(seed, trials, size, r_max, inject_fault);
    } catch (const ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitInvalidInput;
}
