#include "lrtrap/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <json.hpp>

#include "lrtrap/invariant.hpp"
#include "lrtrap/kernels.hpp"
#include "lrtrap/observables.hpp"
#include "lrtrap/oracle.hpp"
#include "lrtrap/perturb.hpp"
#include "lrtrap/quadrature.hpp"
#include "lrtrap/specfun.hpp"
#include "lrtrap/wkb.hpp"

namespace lrtrap {

namespace {

VerifyCheck make_check(const std::string& name, double value, double tol) {
    return {name, value, tol, value <= tol};
}

double check_ep_rk4() {
    double worst = 0.0;
    for (const double omega : {0.5, 1.0, 1.7}) {
        EPConfig cfg;
        cfg.omega = omega;
        cfg.tau = 1.3;
        const EPSolution sol(cfg);
        for (const double frac : {0.3, 0.8, 1.6}) {
            const double t = frac * sol.period();
            worst = std::max(worst, std::abs(sol.sigma(t) - ep_rk4_sigma(cfg, t)));
        }
    }
    return worst;
}

double check_ep_residual_fd() {
    double worst = 0.0;
    EPConfig cfg;
    cfg.omega = 0.5;
    cfg.tau = 2.0;
    const EPSolution sol(cfg);
    const double h = 1e-3;
    for (int i = 1; i <= 20; ++i) {
        const double t = 0.37 * i;
        const double sdd = (-sol.sigma(t + 2 * h) + 16 * sol.sigma(t + h) - 30 * sol.sigma(t) +
                            16 * sol.sigma(t - h) - sol.sigma(t - 2 * h)) /
                           (12 * h * h);
        const double s = sol.sigma(t);
        worst = std::max(worst,
                         std::abs(sdd + cfg.omega * cfg.omega * s - cfg.tau / (s * s * s)));
    }
    return worst;
}

double check_eigen_oracle_a() {
    const auto cfg = ModelConfig::stark(1.0, 1.0, 1.0, 1.0, 0.2);
    const auto pairs = diagonalize_invariant_refined(cfg, default_grid(cfg, 8, 2048), 6);
    double worst = 0.0;
    for (int n = 0; n < 6; ++n) {
        const double exact = lambda_exact(cfg, n);
        worst = std::max(worst, std::abs(pairs[n].lambda - exact) / std::abs(exact));
    }
    return worst;
}

double check_eigen_oracle_b() {
    const auto cfg = ModelConfig::gk_from_ell(1.0, 1.0, 1.0, 0.5, 1);
    const auto pairs = diagonalize_invariant_refined(cfg, default_grid(cfg, 7, 2048), 5);
    double worst = 0.0;
    for (int n = 0; n < 5; ++n) {
        const double exact = lambda_exact(cfg, n);
        worst = std::max(worst, std::abs(pairs[n].lambda - exact) / std::abs(exact));
    }
    return worst;
}

double check_wkb_exactness() {
    const auto cfg = ModelConfig::stark(1.0, 1.0, 1.0, 1.0, 0.2);
    double worst = 0.0;
    for (int n = 0; n <= 6; ++n)
        worst = std::max(worst, std::abs(wkb_quantize(cfg, n) - lambda_exact(cfg, n)));
    return worst;
}

double taylor_ratio_defect(ModelTag tag) {
    double worst = 0.0;
    for (int n = 0; n <= 2; ++n) {
        for (const double eps : {0.2, 0.1}) {
            const auto at = [&](double e) {
                const auto cfg = tag == ModelTag::stark_quadratic
                                     ? ModelConfig::stark(1.0, 1.0, 1.0, 1.0, e)
                                     : ModelConfig::gk_from_ell(1.0, 1.0, 1.0, e, 1);
                const auto fo = lambda_first_order(cfg, n);
                return std::abs(lambda_exact(cfg, n) - fo.total(e));
            };
            const double ratio = at(eps) / at(0.5 * eps);
            worst = std::max(worst, std::abs(ratio - 4.0));
        }
    }
    return worst;
}

double check_observables_quadrature() {
    double worst = 0.0;
    const auto diff = [&](const ObservableSet& a, const ObservableSet& b) {
        const auto rel = [](double u, double v) { return std::abs(u - v) / (1.0 + std::abs(v)); };
        return std::max({rel(a.mean_x, b.mean_x), rel(a.mean_p, b.mean_p),
                         rel(a.mean_x2, b.mean_x2), rel(a.mean_p2, b.mean_p2),
                         rel(a.dxdp, b.dxdp)});
    };
    {
        const auto cfg = ModelConfig::stark(3.0, 0.5, 1.0, 2.0, 0.1);
        for (int n = 0; n <= 2; ++n) {
            const auto st = eigen_exact(cfg, n);
            for (const double t : {0.0, 1.1, 2.7, 4.9}) {
                worst = std::max(
                    worst, diff(expectations_quadrature(cfg, st, t), expectations_exact(cfg, n, t)));
            }
        }
    }
    {
        const auto cfg = ModelConfig::gk_from_ell(3.0, 0.5, 1.0, 0.3, 1);
        for (int n = 0; n <= 2; ++n) {
            const auto st = eigen_exact(cfg, n);
            for (const double t : {0.0, 1.1, 2.7}) {
                worst = std::max(
                    worst, diff(expectations_quadrature(cfg, st, t), expectations_exact(cfg, n, t)));
            }
        }
    }
    return worst;
}

double check_uncertainty_bound() {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> ut(0.0, 12.0), uo(0.3, 1.8), ue(0.0, 1.0);
    std::uniform_int_distribution<int> un(0, 5), ul(0, 2);
    double min_margin = 1e300;
    for (int trial = 0; trial < 400; ++trial) {
        const double t = ut(rng);
        if (trial % 2 == 0) {
            const auto cfg = ModelConfig::stark(1.0 + ue(rng), uo(rng), 1.0, 2.0 * ue(rng),
                                                0.4 * ue(rng));
            const auto o = expectations_exact(cfg, un(rng), t);
            min_margin = std::min(min_margin, o.dxdp - 0.5 * cfg.hbar);
        } else {
            const auto cfg =
                ModelConfig::gk_from_ell(1.0 + ue(rng), uo(rng), 1.0, 0.8 * ue(rng), ul(rng));
            const auto o = expectations_exact(cfg, un(rng), t);
            min_margin = std::min(min_margin, o.dxdp - 0.5 * cfg.hbar);
        }
    }
    return std::max(0.0, -min_margin);
}

double check_phase_derivative() {
    const auto cfg = ModelConfig::stark(3.0, 0.5, 1.0, 2.0, 0.1);
    const EPSolution sol(cfg.ep());
    double worst = 0.0;
    const double h = 1e-5;
    for (int n = 0; n <= 3; ++n) {
        const double lam = lambda_exact(cfg, n);
        for (const double t : {0.4, 3.0, std::numbers::pi - 0.01, 5.9}) {
            const double fd = (lr_phase(cfg, n, t + h) - lr_phase(cfg, n, t - h)) / (2.0 * h);
            const double expect = -lam / (cfg.m * sol.sigma_sq(t) * cfg.hbar);
            worst = std::max(worst, std::abs(fd - expect) / std::abs(expect));
        }
    }
    return worst;
}

double check_specfun_orthonormality() {
    double worst = 0.0;
    for (int n = 0; n <= 5; ++n) {
        for (int m = 0; m <= n; ++m) {
            const double val = integrate(
                [&](double x) {
                    return specfun::parabolic_cylinder_d(n, x) * specfun::parabolic_cylinder_d(m, x);
                },
                -30.0, 30.0, 1e-12, 1e-12);
            const double scale =
                std::exp(0.5 * (specfun::ln_gamma(n + 1.0) + specfun::ln_gamma(m + 1.0))) *
                std::sqrt(2.0 * std::numbers::pi);
            worst = std::max(worst, std::abs(val / scale - (n == m ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double check_tdse_residual(ModelTag tag) {
    const auto cfg = tag == ModelTag::stark_quadratic
                         ? ModelConfig::stark(1.0, 0.5, 1.0, 1.0, 0.1)
                         : ModelConfig::gk_from_ell(1.0, 0.5, 1.0, 0.3, 1);
    const Grid grid = tag == ModelTag::stark_quadratic
                          ? Grid::symmetric(16.0, 16384)
                          : Grid{14.0 / 8192, 14.0, 8192};
    const EPSolution sol(cfg.ep());
    double worst = 0.0;
    for (int n = 0; n <= 3; ++n) {
        const Eigenstate st = eigen_exact(cfg, n);
        for (int i = 0; i < 10; ++i) {
            const double t = sol.period() * i / 9.0;
            const auto psi = [&](double x, double tt) { return st.psi(x, tt); };
            worst = std::max(worst, tdse_residual(cfg, psi, t, grid));
        }
    }
    return worst;
}

double check_cn_overlap() {
    const auto cfg = ModelConfig::stark(1.0, 0.5, 1.0, 1.0, 0.1);
    const int n = 5;
    const Eigenstate st = eigen_exact(cfg, n);
    const Grid grid = default_grid(cfg, n + 3, 4096);
    const EPSolution sol(cfg.ep());
    const double period = sol.period();

    WaveSample state{grid, sample_state_serial(st, grid, 0.0), 0.0};
    state.normalize();

    double min_overlap = 1.0;
    const int checks = 10;
    for (int i = 1; i <= checks; ++i) {
        propagate(cfg, state, period * i / checks, 1e-4);
        WaveSample exact{grid, sample_state_serial(st, grid, state.time), state.time};
        exact.normalize();
        min_overlap = std::min(min_overlap, std::abs(overlap(state, exact)));
    }
    return 1.0 - min_overlap;
}

double check_autocorr_monotonic() {
    double worst = -1e300;
    for (int n = 0; n <= 1; ++n) {
        const auto gap = [&](double ck) {
            const auto cfg = ModelConfig::stark(3.0, 0.5, 1.0, 2.0, ck);
            const TimeGrid tg{0.0, 2.0 * std::numbers::pi, 41};
            const auto ex = autocorr_sweep(cfg, n, tg, Method::exact);
            const auto pe = autocorr_sweep(cfg, n, tg, Method::perturbative);
            double g = 0.0;
            for (int i = 0; i < tg.steps; ++i) g = std::max(g, std::abs(ex[i] - pe[i]));
            return g;
        };
        worst = std::max(worst, gap(0.1) - gap(0.3));
    }
    return worst;  // negative when the small-parameter gap is smaller
}

}  // namespace

bool VerifyReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

VerifyReport run_verify(bool full) {
    VerifyReport report;
    auto add = [&](const std::string& name, double value, double tol) {
        report.checks.push_back(make_check(name, value, tol));
    };

    add("ep_closed_vs_rk4", check_ep_rk4(), 1e-8);
    add("ep_residual_fd", check_ep_residual_fd(), 1e-8);
    add("eigen_oracle_model_a", check_eigen_oracle_a(), 1e-6);
    add("eigen_oracle_model_b", check_eigen_oracle_b(), 1e-5);
    add("wkb_eigenvalue_exactness", check_wkb_exactness(), 1e-8);
    add("perturb_taylor_model_a", taylor_ratio_defect(ModelTag::stark_quadratic), 0.8);
    add("perturb_taylor_model_b", taylor_ratio_defect(ModelTag::goldman_krivchenko), 0.8);
    add("observables_closed_vs_quadrature", check_observables_quadrature(), 1e-7);
    add("uncertainty_lower_bound", check_uncertainty_bound(), 1e-10);
    add("phase_derivative", check_phase_derivative(), 1e-6);
    add("parabolic_cylinder_orthonormality", check_specfun_orthonormality(), 1e-8);

    if (full) {
        add("tdse_residual_model_a", check_tdse_residual(ModelTag::stark_quadratic), 1e-4);
        add("tdse_residual_model_b", check_tdse_residual(ModelTag::goldman_krivchenko), 1e-4);
        add("cn_propagation_overlap", check_cn_overlap(), 1e-3);
        add("autocorr_gap_monotonic", check_autocorr_monotonic(), 0.0);
    }
    return report;
}

std::string verify_report_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json item;
        item["name"] = c.name;
        item["value"] = c.value;
        item["tolerance"] = c.tolerance;
        item["status"] = c.passed ? "pass" : "fail";
        j["checks"].push_back(item);
    }
    j["all_passed"] = report.all_passed();
    return j.dump(2) + "\n";
}

}  // namespace lrtrap
