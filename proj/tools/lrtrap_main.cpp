// lrtrap command-line front end: scenario configuration, subcommand
// dispatch, CSV/JSON emission.  See README.md for usage.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lrtrap/perturb.hpp"
#include "lrtrap/runner.hpp"
#include "lrtrap/scenario.hpp"
#include "lrtrap/verify.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string model = "A";
    double m = 1.0, omega = 1.0, tau = 1.0, E0 = 0.0, hbar = 1.0;
    double c_kappa = 0.0, Omega = 0.0;
    int ell = -1;
    std::string n_spec = "0";
    std::string methods = "exact";
    std::string grid_spec;  // "xmin,xmax,N"
    double t0 = 0.0, t1 = -1.0;
    int steps = 0;
    std::string out_dir = ".";
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "scenario JSON file");
    cmd->add_option("--model", f.model, "A (Stark + x^2) or B (Goldman-Krivchenko)");
    cmd->add_option("--m", f.m, "mass");
    cmd->add_option("--omega", f.omega, "trap frequency");
    cmd->add_option("--tau", f.tau, "Ermakov-Pinney constant");
    cmd->add_option("--E0", f.E0, "field scale E(0)");
    cmd->add_option("--hbar", f.hbar, "hbar");
    cmd->add_option("--c-kappa", f.c_kappa, "model A quadratic coupling");
    cmd->add_option("--Omega", f.Omega, "model B barrier strength");
    cmd->add_option("--ell", f.ell, "model B integer ell (sets Omega via b = 2l+1)");
    cmd->add_option("--n", f.n_spec, "quantum number(s): 3 | 0..5 | 0,2,4");
    cmd->add_option("--method", f.methods, "comma list: exact,perturbative,wkb,oracle");
    cmd->add_option("--grid", f.grid_spec, "xmin,xmax,N");
    cmd->add_option("--t0", f.t0, "start time");
    cmd->add_option("--t1", f.t1, "end time (default: two sigma periods)");
    cmd->add_option("--steps", f.steps, "time samples");
    cmd->add_option("--out", f.out_dir, "output directory");
}

lrtrap::Scenario build_scenario(const CLI::App* cmd, const CommonFlags& f) {
    lrtrap::Scenario sc;
    if (!f.config_path.empty()) sc = lrtrap::scenario_from_file(f.config_path);

    const auto given = [&](const std::string& name) { return cmd->count(name) > 0; };

    if (f.config_path.empty() || given("--model") || given("--m") || given("--omega") ||
        given("--tau") || given("--E0") || given("--hbar") || given("--c-kappa") ||
        given("--Omega") || given("--ell")) {
        lrtrap::ModelConfig base = f.config_path.empty() ? lrtrap::ModelConfig{} : sc.model;
        if (given("--model") || f.config_path.empty())
            base.tag = (f.model == "B" || f.model == "b" || f.model == "gk")
                           ? lrtrap::ModelTag::goldman_krivchenko
                           : lrtrap::ModelTag::stark_quadratic;
        if (given("--m")) base.m = f.m;
        if (given("--omega")) base.omega = f.omega;
        if (given("--tau")) base.tau = f.tau;
        if (given("--E0")) base.E0 = f.E0;
        if (given("--hbar")) base.hbar = f.hbar;
        if (given("--c-kappa")) base.c_kappa = f.c_kappa;
        if (given("--Omega")) base.Omega = f.Omega;
        if (f.config_path.empty()) {
            base.m = f.m; base.omega = f.omega; base.tau = f.tau; base.E0 = f.E0;
            base.hbar = f.hbar; base.c_kappa = f.c_kappa; base.Omega = f.Omega;
        }
        if (given("--ell") && f.ell >= 0)
            base = lrtrap::ModelConfig::gk_from_ell(base.m, base.omega, base.tau, base.E0, f.ell,
                                                    base.hbar);
        base.validate();
        sc.model = base;
    }

    if (given("--n")) sc.n_list = lrtrap::parse_n_list(f.n_spec);
    if (given("--method")) sc.methods = lrtrap::parse_method_list(f.methods);
    if (given("--grid")) {
        lrtrap::GridSpec gs;
        if (std::sscanf(f.grid_spec.c_str(), "%lf,%lf,%d", &gs.xmin, &gs.xmax, &gs.n) != 3)
            throw CLI::ValidationError("--grid expects xmin,xmax,N");
        sc.grid = gs;
    }
    if (given("--t1")) {
        lrtrap::TimeSpec ts{f.t0, f.t1, f.steps > 0 ? f.steps : 100};
        sc.time = ts;
    } else if (given("--t0") || given("--steps")) {
        lrtrap::TimeSpec ts = sc.time.value_or(lrtrap::TimeSpec{0.0, 0.0, 100});
        if (given("--t0")) ts.t0 = f.t0;
        if (given("--steps")) ts.steps = f.steps;
        if (ts.t1 > ts.t0) sc.time = ts;
    }

    const double eps = lrtrap::perturbation_parameter(sc.model);
    for (lrtrap::Method m : sc.methods) {
        if (m == lrtrap::Method::perturbative && eps > 0.5) {
            std::cerr << "warning: expansion parameter " << eps
                      << " > 0.5; first-order results may be unreliable\n";
            break;
        }
    }
    return sc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Driven optical-trap TDSE solver (Lewis-Riesenfeld invariants)"};
    app.require_subcommand(1);

    CommonFlags f_ep, f_inv, f_eigen, f_wavefn, f_obs, f_auto;

    auto* cmd_ep = app.add_subcommand("ep", "sigma, sigma_dot, E versus t");
    add_common(cmd_ep, f_ep);

    auto* cmd_inv = app.add_subcommand("invariant", "invariant coefficients versus t");
    add_common(cmd_inv, f_inv);
    std::string series = "model";
    int series_order = 8;
    double series_k = 1.0;
    cmd_inv->add_option("--series", series, "model | gaussian | soft-coulomb");
    cmd_inv->add_option("--order", series_order, "series truncation order");
    cmd_inv->add_option("--k", series_k, "soft-Coulomb length parameter");

    auto* cmd_eigen = app.add_subcommand("eigen", "eigenvalue table per method");
    add_common(cmd_eigen, f_eigen);

    auto* cmd_wavefn = app.add_subcommand("wavefn", "wavefunction samples per method");
    add_common(cmd_wavefn, f_wavefn);

    auto* cmd_obs = app.add_subcommand("observables", "expectation values versus t");
    add_common(cmd_obs, f_obs);

    auto* cmd_auto = app.add_subcommand("autocorr", "autocorrelation versus t");
    add_common(cmd_auto, f_auto);

    auto* cmd_verify = app.add_subcommand("verify", "run the numerical self-checks");
    bool verify_full = false;
    cmd_verify->add_flag("--full", verify_full, "include propagation-level checks");

    auto* cmd_fig = app.add_subcommand("figures", "emit bundled demo scenario datasets");
    int fig_id = 1;
    std::string fig_out = ".";
    cmd_fig->add_option("--id", fig_id, "dataset id, 1..6")->required();
    cmd_fig->add_option("--out", fig_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_ep->parsed()) lrtrap::run_ep(build_scenario(cmd_ep, f_ep), f_ep.out_dir);
        if (cmd_inv->parsed()) {
            lrtrap::Scenario sc = build_scenario(cmd_inv, f_inv);
            if (series == "gaussian")
                sc.series = lrtrap::SeriesKind::gaussian;
            else if (series == "soft-coulomb")
                sc.series = lrtrap::SeriesKind::soft_coulomb;
            else if (series != "model")
                throw std::invalid_argument("--series must be model|gaussian|soft-coulomb");
            sc.series_order = series_order;
            sc.series_k = series_k;
            lrtrap::run_invariant(sc, f_inv.out_dir);
        }
        if (cmd_eigen->parsed())
            lrtrap::run_eigen(build_scenario(cmd_eigen, f_eigen), f_eigen.out_dir);
        if (cmd_wavefn->parsed())
            lrtrap::run_wavefn(build_scenario(cmd_wavefn, f_wavefn), f_wavefn.out_dir);
        if (cmd_obs->parsed())
            lrtrap::run_observables(build_scenario(cmd_obs, f_obs), f_obs.out_dir);
        if (cmd_auto->parsed())
            lrtrap::run_autocorr(build_scenario(cmd_auto, f_auto), f_auto.out_dir);
        if (cmd_fig->parsed()) lrtrap::run_figures(fig_id, fig_out);
        if (cmd_verify->parsed()) {
            const lrtrap::VerifyReport report = lrtrap::run_verify(verify_full);
            std::cout << lrtrap::verify_report_json(report);
            return report.all_passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
