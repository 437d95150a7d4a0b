#include "lrtrap/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <stdexcept>

#include "lrtrap/csvio.hpp"
#include "lrtrap/invariant.hpp"
#include "lrtrap/kernels.hpp"
#include "lrtrap/perturb.hpp"
#include "lrtrap/wkb.hpp"

namespace lrtrap {

namespace {

namespace fs = std::filesystem;

std::string prep_path(const std::string& out_dir, const std::string& name) {
    fs::create_directories(out_dir);
    return (fs::path(out_dir) / name).string();
}

TimeSpec effective_time(const Scenario& sc) {
    if (sc.time) return *sc.time;
    const double period = std::numbers::pi / sc.model.omega;
    return TimeSpec{0.0, 2.0 * period, 201};
}

double time_point(const TimeSpec& ts, int i) {
    return ts.t0 + (ts.t1 - ts.t0) * i / (ts.steps - 1);
}

int max_n(const Scenario& sc) {
    return *std::max_element(sc.n_list.begin(), sc.n_list.end());
}

bool wants(const Scenario& sc, Method m) {
    return std::find(sc.methods.begin(), sc.methods.end(), m) != sc.methods.end();
}

Grid scenario_grid(const Scenario& sc, int n_points_default) {
    if (sc.grid) return Grid{sc.grid->xmin, sc.grid->xmax, sc.grid->n};
    return default_grid(sc.model, max_n(sc) + 2, n_points_default);
}

Eigenstate make_state(const ModelConfig& cfg, int n, Method m) {
    switch (m) {
        case Method::exact: return eigen_exact(cfg, n);
        case Method::perturbative: return eigen_perturbative(cfg, n);
        case Method::wkb: return eigen_wkb(cfg, n);
        default: throw std::invalid_argument("runner: no state evaluator for method 'oracle'");
    }
}

}  // namespace

void run_ep(const Scenario& sc, const std::string& out_dir) {
    const EPSolution sol(sc.model.ep());
    const TimeSpec ts = effective_time(sc);
    CsvWriter csv(prep_path(out_dir, "ep.csv"));
    csv.header({"t", "sigma", "sigma_dot", "E"});
    for (int i = 0; i < ts.steps; ++i) {
        const double t = time_point(ts, i);
        csv.row({t, sol.sigma(t), sol.sigma_dot(t), sol.field(t)});
    }
}

void run_invariant(const Scenario& sc, const std::string& out_dir) {
    const TimeSpec ts = effective_time(sc);
    CsvWriter csv(prep_path(out_dir, "invariant.csv"));

    const auto coeffs_of = [&](double t) {
        switch (sc.series) {
            case SeriesKind::none: return invariant_quadratic_form(sc.model, t);
            case SeriesKind::gaussian:
                return coeffs_at(sc.model.ep(), expand_gaussian(sc.series_order), t);
            case SeriesKind::soft_coulomb:
                return coeffs_at(sc.model.ep(), expand_soft_coulomb(sc.series_order, sc.series_k),
                                 t);
        }
        throw std::logic_error("run_invariant: bad series kind");
    };

    const InvariantCoeffs first = coeffs_of(ts.t0);
    std::vector<std::string> cols{"t", "alpha", "gamma", "delta", "epsilon"};
    for (const auto& [p, beta] : first.beta_terms) {
        std::string name = "beta_" + format_g17(p);
        std::replace(name.begin(), name.end(), '-', 'm');
        cols.push_back(name);
    }
    csv.header(cols);
    for (int i = 0; i < ts.steps; ++i) {
        const double t = time_point(ts, i);
        const InvariantCoeffs c = coeffs_of(t);
        std::vector<std::optional<double>> cells{t, c.alpha, c.gamma, c.delta, c.epsilon};
        for (const auto& [p, beta] : c.beta_terms) cells.push_back(beta);
        csv.row(cells);
    }
}

void run_eigen(const Scenario& sc, const std::string& out_dir) {
    CsvWriter csv(prep_path(out_dir, "eigen.csv"));
    std::vector<std::string> cols{"n"};
    for (Method m : sc.methods) cols.push_back("lambda_" + to_string(m));
    csv.header(cols);

    std::vector<RefinedEigen> oracle_pairs;
    if (wants(sc, Method::oracle)) {
        const int k = max_n(sc) + 1;
        if (k > 20) throw std::invalid_argument("run_eigen: oracle route limited to n <= 19");
        oracle_pairs = diagonalize_invariant_refined(sc.model, scenario_grid(sc, 4096), k);
    }

    for (int n : sc.n_list) {
        std::vector<std::optional<double>> cells{double(n)};
        for (Method m : sc.methods) {
            switch (m) {
                case Method::exact: cells.push_back(lambda_exact(sc.model, n)); break;
                case Method::perturbative:
                    cells.push_back(lambda_first_order(sc.model, n)
                                        .total(perturbation_parameter(sc.model)));
                    break;
                case Method::wkb: cells.push_back(wkb_quantize(sc.model, n)); break;
                case Method::oracle: cells.push_back(oracle_pairs[n].lambda); break;
            }
        }
        csv.row(cells);
    }
}

void run_wavefn(const Scenario& sc, const std::string& out_dir) {
    const TimeSpec ts = sc.time ? *sc.time : TimeSpec{0.0, 0.0, 1};
    const int n = sc.n_list.front();
    const Grid grid = sc.grid ? Grid{sc.grid->xmin, sc.grid->xmax, sc.grid->n}
                              : default_grid(sc.model, n + 2, 801);

    std::vector<std::string> cols{"t", "x"};
    struct Column {
        Method method;
        Eigenstate state;
        std::optional<WKBData> mask;
    };
    std::vector<Column> columns;
    for (Method m : sc.methods) {
        if (m == Method::oracle) continue;
        Column c{m, make_state(sc.model, n, m), std::nullopt};
        if (m == Method::wkb) c.mask = wkb_data(sc.model, n);
        columns.push_back(std::move(c));
        cols.push_back("re_" + to_string(m));
        cols.push_back("im_" + to_string(m));
        cols.push_back("abs2_" + to_string(m));
    }

    CsvWriter csv(prep_path(out_dir, "wavefn.csv"));
    csv.header(cols);
    const EPSolution sol(sc.model.ep());
    const int t_steps = std::max(ts.steps, 1);
    for (int it = 0; it < t_steps; ++it) {
        const double t = t_steps == 1 ? ts.t0 : time_point(ts, it);
        const double sigma = sol.sigma(t);
        for (int i = 0; i < grid.n; ++i) {
            const double x = grid.point(i);
            std::vector<std::optional<double>> cells{t, x};
            for (const auto& col : columns) {
                if (col.mask && wkb_masked(*col.mask, x / sigma)) {
                    cells.insert(cells.end(), {std::nullopt, std::nullopt, std::nullopt});
                    continue;
                }
                const cx v = col.state.psi(x, t);
                cells.insert(cells.end(), {v.real(), v.imag(), std::norm(v)});
            }
            csv.row(cells);
        }
    }
}

void run_observables(const Scenario& sc, const std::string& out_dir) {
    const TimeSpec ts = effective_time(sc);
    CsvWriter csv(prep_path(out_dir, "observables.csv"));
    csv.header({"t", "n", "method", "mean_x", "mean_p", "mean_x2", "mean_p2", "dxdp"});
    const TimeGrid tg{ts.t0, ts.t1, ts.steps};
    for (int n : sc.n_list) {
        for (Method m : sc.methods) {
            if (m != Method::exact && m != Method::perturbative) continue;
            const auto sweep = observables_sweep(sc.model, n, tg, m);
            for (const auto& o : sweep)
                csv.row_raw({format_g17(o.t), std::to_string(n), to_string(m),
                             format_g17(o.mean_x), format_g17(o.mean_p), format_g17(o.mean_x2),
                             format_g17(o.mean_p2), format_g17(o.dxdp)});
        }
    }
}

void run_autocorr(const Scenario& sc, const std::string& out_dir) {
    const TimeSpec ts = effective_time(sc);
    CsvWriter csv(prep_path(out_dir, "autocorr.csv"));
    std::vector<std::string> cols{"t"};
    const bool single = sc.n_list.size() == 1;
    for (int n : sc.n_list) {
        const std::string suffix = single ? "" : "_n" + std::to_string(n);
        cols.push_back("A_exact" + suffix);
        cols.push_back("A_pert" + suffix);
    }
    csv.header(cols);

    const TimeGrid tg{ts.t0, ts.t1, ts.steps};
    std::vector<std::vector<double>> exact_curves, pert_curves;
    for (int n : sc.n_list) {
        exact_curves.push_back(autocorr_sweep(sc.model, n, tg, Method::exact));
        pert_curves.push_back(autocorr_sweep(sc.model, n, tg, Method::perturbative));
    }
    for (int i = 0; i < ts.steps; ++i) {
        std::vector<std::optional<double>> cells{time_point(ts, i)};
        for (size_t j = 0; j < sc.n_list.size(); ++j) {
            cells.push_back(exact_curves[j][i]);
            cells.push_back(pert_curves[j][i]);
        }
        csv.row(cells);
    }
}

namespace {

std::string trim_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

void figure_observable_file(const ModelConfig& cfg, int n, const TimeSpec& ts, bool model_b,
                            const std::string& path) {
    CsvWriter csv(path);
    if (model_b)
        csv.header({"t", "mean_x2_exact", "mean_x2_pert", "mean_p2_exact", "mean_p2_pert"});
    else
        csv.header({"t", "mean_x_exact", "mean_x_pert", "mean_p_exact", "mean_p_pert",
                    "mean_x2_exact", "mean_x2_pert", "mean_p2_exact", "mean_p2_pert"});
    for (int i = 0; i < ts.steps; ++i) {
        const double t = time_point(ts, i);
        const auto ex = expectations_exact(cfg, n, t);
        const auto pe = expectations_perturbative(cfg, n, t);
        if (model_b)
            csv.row({t, ex.mean_x2, pe.mean_x2, ex.mean_p2, pe.mean_p2});
        else
            csv.row({t, ex.mean_x, pe.mean_x, ex.mean_p, pe.mean_p, ex.mean_x2, pe.mean_x2,
                     ex.mean_p2, pe.mean_p2});
    }
}

void figure_autocorr_file(const ModelConfig& cfg, const std::vector<int>& ns, const TimeSpec& ts,
                          const std::string& path) {
    CsvWriter csv(path);
    std::vector<std::string> cols{"t"};
    for (int n : ns) {
        cols.push_back("A_exact_n" + std::to_string(n));
        cols.push_back("A_pert_n" + std::to_string(n));
    }
    csv.header(cols);
    const TimeGrid tg{ts.t0, ts.t1, ts.steps};
    std::vector<std::vector<double>> ex, pe;
    for (int n : ns) {
        ex.push_back(autocorr_sweep(cfg, n, tg, Method::exact));
        pe.push_back(autocorr_sweep(cfg, n, tg, Method::perturbative));
    }
    for (int i = 0; i < ts.steps; ++i) {
        std::vector<std::optional<double>> cells{time_point(ts, i)};
        for (size_t j = 0; j < ns.size(); ++j) {
            cells.push_back(ex[j][i]);
            cells.push_back(pe[j][i]);
        }
        csv.row(cells);
    }
}

void figure_wavefn_file(const ModelConfig& cfg, int n, double t, const std::string& path) {
    const Eigenstate exact = eigen_exact(cfg, n);
    const Eigenstate pert = eigen_perturbative(cfg, n);
    const Eigenstate wkb = eigen_wkb(cfg, n);
    const WKBData mask = wkb_data(cfg, n);
    const EPSolution sol(cfg.ep());
    const double sigma = sol.sigma(t);
    const double ext = sigma * (std::abs(mask.xi_minus) + 2.5);
    const double lo = sigma * (mask.xi_minus - 2.5), hi = sigma * (mask.xi_plus + 2.5);
    static_cast<void>(ext);

    CsvWriter csv(path);
    csv.header({"x", "re_exact", "re_wkb", "re_pert"});
    const int pts = 801;
    for (int i = 0; i < pts; ++i) {
        const double x = lo + (hi - lo) * i / (pts - 1);
        std::vector<std::optional<double>> cells{x, exact.psi(x, t).real()};
        if (wkb_masked(mask, x / sigma))
            cells.push_back(std::nullopt);
        else
            cells.push_back(wkb.psi(x, t).real());
        cells.push_back(pert.psi(x, t).real());
        csv.row(cells);
    }
}

}  // namespace

void run_figures(int id, const std::string& out_dir) {
    fs::create_directories(out_dir);
    const double pi = std::numbers::pi;
    switch (id) {
        case 1: {
            // exact vs perturbative expectation values, Stark model
            for (double ck : {0.1, 0.3}) {
                const auto cfg = ModelConfig::stark(3.0, 0.5, 1.0, 2.0, ck);
                figure_observable_file(cfg, 1, TimeSpec{0.0, 4.0 * pi, 401}, false,
                                       prep_path(out_dir, "fig1_ck" + trim_num(ck) + ".csv"));
            }
            return;
        }
        case 2: {
            for (double ck : {0.1, 0.3}) {
                const auto cfg = ModelConfig::stark(3.0, 0.5, 1.0, 2.0, ck);
                figure_autocorr_file(cfg, {0, 1, 2}, TimeSpec{0.0, 4.0 * pi, 161},
                                     prep_path(out_dir, "fig2_ck" + trim_num(ck) + ".csv"));
            }
            return;
        }
        case 3: {
            for (double e0 : {0.1, 0.5}) {
                const auto cfg = ModelConfig::gk_from_ell(3.0, 0.5, 1.0, e0, 2);
                figure_observable_file(cfg, 1, TimeSpec{0.0, 4.0 * pi, 401}, true,
                                       prep_path(out_dir, "fig3_E" + trim_num(e0) + ".csv"));
            }
            return;
        }
        case 4: {
            for (double e0 : {0.1, 0.5}) {
                const auto cfg = ModelConfig::gk_from_ell(3.0, 0.5, 1.0, e0, 2);
                figure_autocorr_file(cfg, {0, 1, 2}, TimeSpec{0.0, 4.0 * pi, 161},
                                     prep_path(out_dir, "fig4_E" + trim_num(e0) + ".csv"));
            }
            return;
        }
        case 5: {
            for (double ck : {0.18, 0.2}) {
                const auto cfg = ModelConfig::stark(1.0, 0.5, 1.0, 1.0, ck);
                figure_wavefn_file(cfg, 1, 0.0,
                                   prep_path(out_dir, "fig5_ck" + trim_num(ck) + ".csv"));
            }
            return;
        }
        case 6: {
            const auto cfg = ModelConfig::stark(1.0, 0.5, 1.0, 1.0, 0.1);
            const double period = pi / cfg.omega;
            int idx = 0;
            for (double frac : {0.0, 0.25, 0.5, 0.75}) {
                figure_wavefn_file(cfg, 5, frac * period,
                                   prep_path(out_dir, "fig6_t" + std::to_string(idx++) + ".csv"));
            }
            return;
        }
        default: throw std::invalid_argument("run_figures: id must be in 1..6");
    }
}

}  // namespace lrtrap
