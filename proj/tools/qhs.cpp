// Command line interface for the exact quantum-homogeneous-space engine.
//
// Exit codes: 0 all checks pass (findings allowed), 1 at least one check
// failed, 2 usage/parse/IO error, 3 internal invariant violation.

#include <CLI11.hpp>

#include <iostream>

#include "qhopf/errors.hpp"
#include "qhopf/galois.hpp"
#include "qhopf/parse.hpp"
#include "qhopf/scenarios.hpp"
#include "qhopf/sphere_system.hpp"

namespace {

using namespace qhopf;

PresetBundle bundle_for(const std::string& name) {
    auto p = preset_from_string(name);
    if (!p) throw domain_error("unknown preset: " + name);
    return make_preset(*p);
}

int emit_and_code(const Report& report, const std::string& format, const std::string& out) {
    emit_report(report, format == "text" ? ReportFormat::text : ReportFormat::json, out);
    return report.all_passed() ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"qhs — exact symbolic verifier for quantum homogeneous spaces"};
    app.require_subcommand(1);

    std::string preset, expr, scenario, out_path, format = "json", field_mode = "pq";
    int max_degree = 4, c_bound = 2, det_n = 2;
    bool as_polynomial = false;

    auto* normalize = app.add_subcommand("normalize", "normal form of an expression");
    normalize->add_option("--preset", preset, "presentation name")->required();
    normalize->add_option("EXPR", expr, "expression")->required();

    auto* coproduct = app.add_subcommand("coproduct", "coproduct of an expression");
    coproduct->add_option("--preset", preset, "presentation name")->required();
    coproduct->add_option("EXPR", expr, "expression")->required();

    auto* qbasis = app.add_subcommand("quotient-basis", "representative words of the quotient coalgebra");
    qbasis->add_option("--scenario", scenario, "plane | sphere | sphere-mu-eq-nu")->required();
    qbasis->add_option("--max-degree", max_degree, "filtration bound");
    qbasis->add_option("--c-bound", c_bound, "determinant generator exponent bound (plane)");

    auto* coinv = app.add_subcommand("coinvariants", "basis of the coinvariant subalgebra");
    coinv->add_option("--scenario", scenario, "plane | sphere | sphere-mu-eq-nu")->required();
    coinv->add_option("--max-degree", max_degree, "filtration bound");
    coinv->add_option("--c-bound", c_bound, "determinant generator exponent bound (plane)");

    auto* det = app.add_subcommand("det", "determinant of the sphere linear system");
    det->add_option("--n", det_n, "system index")->required();
    det->add_flag("--as-polynomial", as_polynomial, "print P_{n-1}(x) instead of the value in p");

    auto* verify = app.add_subcommand("verify", "run a verification scenario");
    verify->add_option("--scenario", scenario, "plane | sphere | sphere-mu-eq-nu | axioms | galois")
        ->required();
    verify->add_option("--max-degree", max_degree, "filtration bound");
    verify->add_option("--c-bound", c_bound, "exponent bound for the determinant generator (plane)");
    verify->add_option("--field-mode", field_mode, "pq | munu (sphere)");
    verify->add_option("--out", out_path, "report file (default: standard output)");
    verify->add_option("--format", format, "json | text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (normalize->parsed()) {
        PresetBundle b = bundle_for(preset);
        std::cout << parse_expression(expr, *b.pres).to_string() << "\n";
        return 0;
    }
    if (coproduct->parsed()) {
        PresetBundle b = bundle_for(preset);
        if (!b.hopf) throw domain_error("preset " + preset + " carries no coproduct");
        std::cout << b.hopf->coproduct(parse_expression(expr, *b.pres)).to_string() << "\n";
        return 0;
    }
    if (qbasis->parsed() || coinv->parsed()) {
        EmbeddedSpace sp;
        Window w{max_degree, {}};
        if (scenario == "plane") {
            sp = make_plane_space();
            int cw = c_bound + max_degree;
            w.aux_bounds = {{sp.H->gen("c"), cw}, {sp.H->gen("cinv"), cw}};
        } else if (scenario == "sphere") {
            sp = make_sphere_space(field_mode == "munu" ? SphereFieldMode::munu : SphereFieldMode::pq);
        } else if (scenario == "sphere-mu-eq-nu" || scenario == "sphere_mu_eq_nu") {
            sp = make_sphere_mu_eq_nu_space();
        } else {
            throw domain_error("unknown scenario for this subcommand: " + scenario);
        }
        IdealSpan J = IdealSpan::build(sp.H, sp.hopf, sp.ideal_gens, w, 2);
        QuotientCoalgebra Q(std::move(J));
        if (qbasis->parsed()) {
            for (const Word& r : Q.reps()) std::cout << sp.H->render_word(r) << "\n";
        } else {
            for (int d = -max_degree; d <= max_degree; ++d)
                for (const NcPoly& x : Q.coinvariants(max_degree, d)) std::cout << x.to_string() << "\n";
        }
        return 0;
    }
    if (det->parsed()) {
        if (det_n < 1) throw domain_error("--n must be at least 1");
        if (as_polynomial)
            std::cout << p_polynomial(det_n - 1).to_string() << "\n";
        else
            std::cout << sphere_system_det(det_n).to_string() << "\n";
        return 0;
    }
    if (verify->parsed()) {
        Report report;
        if (scenario == "plane") {
            report = run_scenario_plane(max_degree, c_bound);
        } else if (scenario == "sphere") {
            report = run_scenario_sphere(max_degree,
                                         field_mode == "munu" ? SphereFieldMode::munu : SphereFieldMode::pq);
        } else if (scenario == "sphere-mu-eq-nu" || scenario == "sphere_mu_eq_nu") {
            report = run_scenario_sphere_mu_eq_nu(max_degree);
        } else if (scenario == "axioms") {
            report = run_scenario_axioms(max_degree);
        } else if (scenario == "galois") {
            report = run_scenario_galois(max_degree);
        } else {
            throw domain_error("unknown scenario: " + scenario);
        }
        return emit_and_code(report, format, out_path);
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qhopf::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const qhopf::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
