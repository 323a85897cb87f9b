#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "kmv/report.hpp"

namespace {

using namespace kmv;

int print_results(const std::vector<CheckResult>& results, bool verbose) {
    bool all = !results.empty();
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "\n";
        if (verbose || !r.pass) {
            for (const auto& [k, v] : r.facts) std::cout << "      " << k << ": " << v << "\n";
            if (!r.notes.empty()) std::cout << "      note: " << r.notes << "\n";
        }
        if (!r.pass) all = false;
    }
    return all ? 0 : 1;
}

int run_ids(const CheckContext& ctx, const std::vector<std::string>& ids, bool verbose) {
    return print_results(run_all(ctx, 1, ids), verbose);
}

void print_condition_report(const SingularityReport& rep) {
    std::cout << "vector " << rep.vector_id << ", degree " << rep.degree << ", weight "
              << rep.weight << "\n";
    for (const auto& c : rep.conditions) {
        std::cout << "  " << c.name << ": "
                  << (c.zero ? "0" : (c.certified ? "in the certified submodule" : c.residual))
                  << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic checks for a collapsing-level affine vertex algebra"};
    app.require_subcommand(1);
    std::string data_override;
    bool verbose = false;
    app.add_option("--data-dir", data_override, "golden data directory (default: built-in)");
    app.add_flag("-v,--verbose", verbose, "print facts for passing checks too");

    auto make_ctx = [&] {
        CheckContext ctx;
        ctx.data = data_dir(data_override).string();
        return ctx;
    };

    // verify-singular
    auto* vs = app.add_subcommand("verify-singular", "singular-vector conditions");
    std::string vs_case = "vacuum-sl4";
    std::string vs_k = "-5/2";
    int vs_n = 0, vs_row = 0, vs_series = 0;
    vs->add_option("--case", vs_case,
                   "vacuum-sl4 | vacuum-sl5 | wnu-omega1 | wnu-omega3 | sigma | uniqueness | "
                   "sl5-family");
    vs->add_option("--k", vs_k, "level (vacuum cases only; default -5/2)");
    vs->add_option("--n", vs_n, "restrict to one parameter value");
    vs->add_option("--row", vs_row, "sl5-family: table row 1..16");
    vs->add_option("--series", vs_series, "sl5-family: series 1 or 2");

    // zhu-classify
    auto* zc = app.add_subcommand("zhu-classify", "commutator polynomials and their zero locus");
    bool zc_scan = true;
    zc->add_flag("--scan,!--no-scan", zc_scan, "include the half-integer box scan");

    // c2-reduce
    auto* c2 = app.add_subcommand("c2-reduce", "commutative degeneration images");
    std::string c2_case = "vacuum";
    c2->add_option("--case", c2_case, "vacuum | omega1 | omega3 | all");

    // ope-collapse
    auto* oc = app.add_subcommand("ope-collapse", "pole coefficients at a chosen level");
    std::string oc_k = "-5/2";
    oc->add_option("--k", oc_k, "level");

    // fusion-check
    auto* fc = app.add_subcommand("fusion-check", "tensor decompositions and the oracle");

    // weyl-check
    auto* wc = app.add_subcommand("weyl-check", "differential-operator realization");

    // report
    auto* rp = app.add_subcommand("report", "run every check and render a report");
    std::string rp_format = "json", rp_out;
    int rp_jobs = 1;
    bool rp_timings = false;
    std::vector<std::string> rp_only;
    rp->add_option("--format", rp_format, "json | md");
    rp->add_option("--out", rp_out, "output file (default stdout)");
    rp->add_option("--jobs", rp_jobs, "worker threads");
    rp->add_option("--only", rp_only, "restrict to check ids or prefixes");
    rp->add_flag("--timings", rp_timings, "append the volatile timing field to JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        CheckContext ctx = make_ctx();

        if (vs->parsed()) {
            Rational k = parse_rational(vs_k);
            if (vs_case == "vacuum-sl4" || vs_case == "vacuum-sl5") {
                bool sl4 = vs_case == "vacuum-sl4";
                VectorCheck vc = sl4 ? verify_vacuum_sl4(ctx.rs4, ctx.data, k)
                                     : verify_vacuum_sl5(ctx.rs5, ctx.data, k);
                print_condition_report(vc.sing);
                bool ok = vc.pass();
                if (sl4 && k == rat(-5, 2)) {
                    ModuleContext mc{&ctx.rs4, k, TrivialModel{}};
                    ModuleVector v = load_vector(mc, ctx.data, "singv_vacuum_sl4.vec");
                    int surv = mutation_survivors(mc, v, standard_conditions(ctx.rs4), 20);
                    std::cout << "  mutations: " << (20 - surv) << "/20 rejected\n";
                    ok = ok && surv == 0;
                }
                std::cout << (ok ? "PASS" : "FAIL") << "  " << vs_case << " at k = " << k.str()
                          << "\n";
                return ok ? 0 : 1;
            }
            if (vs_case == "wnu-omega1" || vs_case == "wnu-omega3") {
                return run_ids(ctx,
                               {vs_case == "wnu-omega1" ? "singular.module.omega1"
                                                        : "singular.module.omega3"},
                               verbose);
            }
            if (vs_case == "sigma") return run_ids(ctx, {"singular.module.sigma"}, verbose);
            if (vs_case == "uniqueness")
                return run_ids(ctx, {"singular.module.uniqueness"}, verbose);
            if (vs_case == "sl5-family") {
                if (vs_row == 0) return run_ids(ctx, {"sl5.u", "sl5.families"}, verbose);
                bool all = true;
                for (int series : {1, 2}) {
                    if (vs_series && series != vs_series) continue;
                    for (int n = 1; n <= 6; ++n) {
                        if (vs_n && n != vs_n) continue;
                        Sl5SeriesCheck c = verify_sl5_series(ctx.rs5, vs_row, series, n);
                        std::cout << (c.pass() ? "PASS" : "FAIL") << "  row " << vs_row
                                  << " series " << series << " n=" << n
                                  << (c.note.empty() ? "" : "  (" + c.note + ")") << "\n";
                        if (verbose && c.constructed) print_condition_report(c.sing);
                        all = all && c.pass();
                    }
                }
                return all ? 0 : 1;
            }
            std::cerr << "unknown case " << vs_case << "\n";
            return 2;
        }

        if (zc->parsed()) {
            std::vector<std::string> ids{"zhu.projection", "zhu.p0", "zhu.families",
                                         "zhu.factorization"};
            if (zc_scan) ids.insert(ids.begin() + 3, "zhu.scan");
            return run_ids(ctx, ids, verbose);
        }

        if (c2->parsed()) {
            std::vector<std::string> ids;
            if (c2_case == "all") ids = {"c2.grading", "c2.vacuum", "c2.omega1", "c2.omega3"};
            else ids = {"c2." + c2_case};
            return run_ids(ctx, ids, verbose);
        }

        if (oc->parsed()) {
            OpeTable t = OpeTable::load(ctx.data);
            CollapseReport c = collapse_check(t, parse_rational(oc_k));
            std::cout << "level " << c.k.str() << "\n"
                      << "  charged pair, fourth order: " << c.p4.str() << "\n"
                      << "  charged pair, third order: " << c.p3.str() << "\n"
                      << "  charged pair, second order: " << c.p2_L.str() << " L  +  "
                      << c.p2_JJ.str() << " :JJ:  +  " << c.p2_dJ.str() << " dJ\n"
                      << "  stress tensor, fourth order: " << c.central.str() << "\n"
                      << "  weight-three field, sixth order: " << c.ww.str() << "\n"
                      << "  weight-three coefficient at first order (reported only): "
                      << c.charged_w.str() << "\n";
            std::cout << (c.collapsed() ? "collapsed" : "not collapsed") << "\n";
            return 0;
        }

        if (fc->parsed())
            return run_ids(
                ctx, {"tensor.decompositions", "tensor.fusion.multiplicity", "tensor.oracle",
                      "tensor.degrees"},
                verbose);

        if (wc->parsed())
            return run_ids(ctx, {"weyl.homomorphism", "weyl.relations", "weyl.kernel",
                                 "weyl.action", "weyl.ma"},
                           verbose);

        if (rp->parsed()) {
            auto t0 = std::chrono::steady_clock::now();
            auto results = run_all(ctx, rp_jobs, rp_only);
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::string body = rp_format == "md" ? report_markdown(results, secs)
                                                 : report_json(results, rp_timings, secs);
            if (rp_out.empty()) {
                std::cout << body;
            } else {
                std::ofstream out(rp_out, std::ios::binary);
                out << body;
            }
            for (const auto& r : results)
                if (!r.pass) return 1;
            return results.empty() ? 2 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
