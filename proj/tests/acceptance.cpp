// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are fixed here, not tuned at run time.

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lrtrap/kernels.hpp"
#include "lrtrap/observables.hpp"
#include "lrtrap/oracle.hpp"
#include "lrtrap/perturb.hpp"
#include "lrtrap/quadrature.hpp"
#include "lrtrap/runner.hpp"
#include "lrtrap/specfun.hpp"
#include "lrtrap/wkb.hpp"

using namespace lrtrap;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// 1. closed-form model A eigenvalues against the refined grid diagonalization
Outcome criterion_1() {
    double worst_rel = 0.0;
    for (const double ck : {0.0, 0.18, 0.2}) {
        const auto cfg = ModelConfig::stark(1.0, 1.0, 1.0, 1.0, ck);
        const auto pairs = diagonalize_invariant_refined(cfg, default_grid(cfg, 12, 4096), 11);
        const double spacing = cfg.hbar * std::sqrt(cfg.m * cfg.stiffness());
        for (int n = 0; n <= 10; ++n) {
            const double exact = lambda_exact(cfg, n);
            // lambda_0 crosses zero at c_kappa = 0; use the level spacing as
            // the floor of the relative scale there
            const double scale = std::max(std::abs(exact), spacing);
            worst_rel = std::max(worst_rel, std::abs(pairs[n].lambda - exact) / scale);
        }
    }
    return {worst_rel < 1e-6, "max |dlambda|/lambda = " + fmt(worst_rel) + " (tol 1e-6)"};
}

// 2. closed-form model B eigenvalues against the half-line diagonalization
Outcome criterion_2() {
    double worst_rel = 0.0;
    for (const int ell : {0, 1, 2}) {
        for (const double e0 : {0.0, 0.5}) {
            const auto cfg = ModelConfig::gk_from_ell(1.0, 1.0, 1.0, e0, ell);
            const auto pairs = diagonalize_invariant_refined(cfg, default_grid(cfg, 10, 4096), 9);
            for (int n = 0; n <= 8; ++n) {
                const double exact = lambda_exact(cfg, n);
                worst_rel = std::max(worst_rel, std::abs(pairs[n].lambda - exact) / exact);
            }
        }
    }
    return {worst_rel < 1e-5, "max |dlambda|/lambda = " + fmt(worst_rel) + " (tol 1e-5)"};
}

// 3. WKB quantization reproduces the exact model A eigenvalues
Outcome criterion_3() {
    double worst_abs = 0.0;
    for (const double ck : {0.0, 0.18, 0.2}) {
        const auto cfg = ModelConfig::stark(1.0, 1.0, 1.0, 1.0, ck);
        for (int n = 0; n <= 10; ++n)
            worst_abs = std::max(worst_abs,
                                 std::abs(wkb_quantize(cfg, n) - lambda_exact(cfg, n)));
    }
    return {worst_abs < 1e-8, "max |lambda_wkb - lambda_exact| = " + fmt(worst_abs) + " (tol 1e-8)"};
}

// 4. first-order Taylor defect falls by 4 +- 0.8 under eps halving
Outcome criterion_4() {
    double lo = 1e300, hi = 0.0;
    for (const bool model_b : {false, true}) {
        for (int n = 0; n <= 3; ++n) {
            const auto defect = [&](double eps) {
                const auto cfg = model_b ? ModelConfig::gk_from_ell(1.0, 1.0, 1.0, eps, 1)
                                         : ModelConfig::stark(1.0, 1.0, 1.0, 1.0, eps);
                return std::abs(lambda_exact(cfg, n) - lambda_first_order(cfg, n).total(eps));
            };
            const double d02 = defect(0.2), d01 = defect(0.1), d005 = defect(0.05);
            for (const double r : {d02 / d01, d01 / d005}) {
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
        }
    }
    const bool pass = lo > 3.2 && hi < 4.8;
    return {pass, "defect ratios in [" + fmt(lo) + ", " + fmt(hi) + "] (need within 4 +- 0.8)"};
}

// 5. TDSE validity: analytic residuals and Crank-Nicolson overlap
Outcome criterion_5() {
    double worst_resid = 0.0;
    {
        const auto cfg = ModelConfig::stark(1.0, 0.5, 1.0, 1.0, 0.1);
        const Grid grid = Grid::symmetric(16.0, 16384);
        const EPSolution sol(cfg.ep());
        for (int n = 0; n <= 3; ++n) {
            const Eigenstate st = eigen_exact(cfg, n);
            for (int i = 0; i < 10; ++i) {
                const double t = sol.period() * i / 9.0;
                worst_resid = std::max(
                    worst_resid,
                    tdse_residual(cfg, [&](double x, double tt) { return st.psi(x, tt); }, t, grid));
            }
        }
    }
    {
        const auto cfg = ModelConfig::gk_from_ell(1.0, 0.5, 1.0, 0.3, 1);
        const Grid grid{14.0 / 8192, 14.0, 8192};
        const EPSolution sol(cfg.ep());
        for (int n = 0; n <= 3; ++n) {
            const Eigenstate st = eigen_exact(cfg, n);
            for (int i = 0; i < 10; ++i) {
                const double t = sol.period() * i / 9.0;
                worst_resid = std::max(
                    worst_resid,
                    tdse_residual(cfg, [&](double x, double tt) { return st.psi(x, tt); }, t, grid));
            }
        }
    }

    // Crank-Nicolson overlap over one period, n = 5, c_kappa = 0.1, w = 0.5
    const auto cfg = ModelConfig::stark(1.0, 0.5, 1.0, 1.0, 0.1);
    const Eigenstate st = eigen_exact(cfg, 5);
    const Grid grid = default_grid(cfg, 8, 4096);
    WaveSample state{grid, sample_state(st, grid, 0.0), 0.0};
    state.normalize();
    const EPSolution sol(cfg.ep());
    double min_overlap = 1.0;
    for (int i = 1; i <= 10; ++i) {
        propagate(cfg, state, sol.period() * i / 10.0, 1e-4);
        WaveSample target{grid, sample_state(st, grid, state.time), state.time};
        target.normalize();
        min_overlap = std::min(min_overlap, std::abs(overlap(state, target)));
    }
    const bool pass = worst_resid < 1e-4 && min_overlap > 0.999;
    return {pass, "max residual = " + fmt(worst_resid) + " (tol 1e-4), min CN overlap = " +
                      fmt(min_overlap) + " (need > 0.999)"};
}

// 6. uncertainty bound at random samples plus the equality pattern
Outcome criterion_6() {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> ut(0.0, 20.0), uo(0.3, 1.7), up(0.0, 1.0);
    std::uniform_int_distribution<int> un(0, 5), ul(0, 2);
    double min_margin = 1e300;
    for (int trial = 0; trial < 1000; ++trial) {
        const double t = ut(rng);
        const int n = un(rng);
        ObservableSet o;
        if (trial % 2 == 0) {
            const auto cfg = ModelConfig::stark(0.5 + 1.5 * up(rng), uo(rng), 0.4 + up(rng),
                                                2.0 * up(rng), 0.4 * up(rng));
            o = (trial % 4 == 0) ? expectations_exact(cfg, n, t)
                                 : expectations_perturbative(cfg, n, t);
            min_margin = std::min(min_margin, o.dxdp - 0.5 * cfg.hbar);
        } else {
            const auto cfg = ModelConfig::gk_from_ell(0.5 + 1.5 * up(rng), uo(rng), 0.4 + up(rng),
                                                      0.35 * up(rng), ul(rng));
            o = (trial % 4 == 1) ? expectations_exact(cfg, n, t)
                                 : expectations_perturbative(cfg, n, t);
            min_margin = std::min(min_margin, o.dxdp - 0.5 * cfg.hbar);
        }
    }

    double worst_eq = 0.0;
    const auto cfg = ModelConfig::stark(3.0, 0.5, 1.0, 2.0, 0.2);
    for (int n = 0; n <= 5; ++n) {
        for (int k = 0; k <= 6; ++k) {
            const double t = k * 0.5 * std::numbers::pi / cfg.omega;  // sin(2wt) = 0
            worst_eq = std::max(worst_eq,
                                std::abs(expectations_exact(cfg, n, t).dxdp - (n + 0.5)));
        }
    }
    const bool pass = min_margin >= -1e-10 && worst_eq < 1e-10;
    return {pass, "min (dxdp - hbar/2) = " + fmt(min_margin) +
                      ", max |dxdp - (n+1/2)| at sin(2wt)=0 = " + fmt(worst_eq)};
}

// 7. closed-form observables vs quadrature (exact) and Taylor slope (pert)
Outcome criterion_7() {
    double worst_rel = 0.0;
    const auto fields = [](const ObservableSet& o) {
        return std::array<double, 5>{o.mean_x, o.mean_p, o.mean_x2, o.mean_p2, o.dxdp};
    };
    const auto run_model = [&](const ModelConfig& cfg) {
        const EPSolution sol(cfg.ep());
        for (int n = 0; n <= 4; ++n) {
            const Eigenstate st = eigen_exact(cfg, n);
            for (int i = 0; i < 10; ++i) {
                const double t = sol.period() * i / 9.0;
                const auto a = fields(expectations_quadrature(cfg, st, t));
                const auto b = fields(expectations_exact(cfg, n, t));
                for (int f = 0; f < 5; ++f)
                    worst_rel =
                        std::max(worst_rel, std::abs(a[f] - b[f]) / (1.0 + std::abs(b[f])));
            }
        }
    };
    run_model(ModelConfig::stark(3.0, 0.5, 1.0, 2.0, 0.1));
    run_model(ModelConfig::gk_from_ell(3.0, 0.5, 1.0, 0.3, 2));

    // perturbative displays: value and eps-slope at eps = 0 match the exact forms
    double worst_slope = 0.0;
    for (const bool model_b : {false, true}) {
        const auto make = [&](double eps) {
            return model_b ? ModelConfig::gk_from_ell(3.0, 0.5, 1.0, eps, 2)
                           : ModelConfig::stark(3.0, 0.5, 1.0, 2.0, eps);
        };
        for (int n = 0; n <= 4; ++n) {
            for (const double t : {0.7, 2.2, 4.8}) {
                const double h = 1e-5;
                const auto ex0 = fields(expectations_exact(make(0.0), n, t));
                const auto pe0 = fields(expectations_perturbative(make(0.0), n, t));
                const auto exh = fields(expectations_exact(make(h), n, t));
                const auto peh = fields(expectations_perturbative(make(h), n, t));
                for (int f = 0; f < 5; ++f) {
                    worst_slope = std::max(worst_slope, std::abs(ex0[f] - pe0[f]));
                    const double se = (exh[f] - ex0[f]) / h;
                    const double sp = (peh[f] - pe0[f]) / h;
                    worst_slope = std::max(worst_slope, std::abs(se - sp) * h);
                }
            }
        }
    }
    const bool pass = worst_rel < 1e-7 && worst_slope < 1e-7;
    return {pass, "max closed-vs-quadrature rel = " + fmt(worst_rel) +
                      " (tol 1e-7), Taylor mismatch = " + fmt(worst_slope)};
}

// 8. autocorrelation: unit start, end-to-end preset curves, gap monotonicity
Outcome criterion_8() {
    double worst_start = 0.0;
    {
        const auto cfg_a = ModelConfig::stark(3.0, 0.5, 1.0, 2.0, 0.1);
        const auto cfg_b = ModelConfig::gk_from_ell(3.0, 0.5, 1.0, 0.1, 2);
        for (int n = 0; n <= 2; ++n) {
            for (const Method m : {Method::exact, Method::perturbative}) {
                worst_start = std::max(worst_start,
                                       std::abs(autocorrelation(cfg_a, n, 0.0, m) - 1.0));
                worst_start = std::max(worst_start,
                                       std::abs(autocorrelation(cfg_b, n, 0.0, m) - 1.0));
            }
        }
    }

    // end-to-end generation of the bundled autocorrelation datasets
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "lrtrap_acceptance_figs";
    fs::remove_all(dir);
    run_figures(2, dir.string());
    run_figures(4, dir.string());
    bool files_ok = true;
    for (const char* name : {"fig2_ck0.1.csv", "fig2_ck0.3.csv", "fig4_E0.1.csv", "fig4_E0.5.csv"})
        files_ok = files_ok && fs::exists(dir / name) && fs::file_size(dir / name) > 1000;

    // exact-vs-perturbative max gap grows with the expansion parameter
    bool monotone = true;
    double margin = 1e300;
    for (int n = 0; n <= 2; ++n) {
        const auto gap = [&](double ck) {
            const auto cfg = ModelConfig::stark(3.0, 0.5, 1.0, 2.0, ck);
            const TimeGrid tg{0.0, 2.0 * std::numbers::pi, 49};
            const auto ex = autocorr_sweep(cfg, n, tg, Method::exact);
            const auto pe = autocorr_sweep(cfg, n, tg, Method::perturbative);
            double g = 0.0;
            for (int i = 0; i < tg.steps; ++i) g = std::max(g, std::abs(ex[i] - pe[i]));
            return g;
        };
        const double g1 = gap(0.1), g3 = gap(0.3);
        monotone = monotone && g1 < g3;
        margin = std::min(margin, g3 - g1);
    }
    fs::remove_all(dir);
    const bool pass = worst_start < 1e-9 && files_ok && monotone;
    return {pass, "max |A(0)-1| = " + fmt(worst_start) + ", presets " +
                      (files_ok ? "emitted" : "MISSING") + ", gap(0.1) < gap(0.3) margin " +
                      fmt(margin)};
}

// 9. phase continuity and derivative identity
Outcome criterion_9() {
    double worst_jump = 0.0, worst_rate = 0.0;
    const auto cfg_a = ModelConfig::stark(3.0, 0.5, 1.0, 2.0, 0.1);
    const auto cfg_b = ModelConfig::gk_from_ell(3.0, 0.5, 1.0, 0.2, 1);
    for (const auto& cfg : {cfg_a, cfg_b}) {
        const EPSolution sol(cfg.ep());
        const double half = 0.5 * std::numbers::pi / cfg.omega;
        for (int n = 0; n <= 2; ++n) {
            for (int k = 1; k <= 4; ++k) {
                const double t0 = (2 * k - 1) * half;  // omega t = pi/2 + (k-1) pi
                const double delta = 1e-10;
                worst_jump = std::max(
                    worst_jump, std::abs(lr_phase(cfg, n, t0 + delta) - lr_phase(cfg, n, t0 - delta)));
            }
            const double lam = lambda_exact(cfg, n);
            for (const double t : {0.5, half - 0.03, half + 0.03, 3.0 * half, 7.7}) {
                const double h = 1e-5;
                const double fd =
                    (lr_phase(cfg, n, t + h) - lr_phase(cfg, n, t - h)) / (2.0 * h);
                const double expect = -lam / (cfg.m * sol.sigma_sq(t) * cfg.hbar);
                worst_rate = std::max(worst_rate, std::abs(fd - expect) / std::abs(expect));
            }
        }
    }
    const bool pass = worst_jump < 1e-9 && worst_rate < 1e-6;
    return {pass, "max branch jump = " + fmt(worst_jump) + " (tol 1e-9), max rate error = " +
                      fmt(worst_rate) + " (tol 1e-6)"};
}

// 10. special-function suite: orthonormality and recurrence-vs-sum checks
Outcome criterion_10() {
    double worst_orth = 0.0;
    for (int n = 0; n <= 5; ++n) {
        for (int m = 0; m <= n; ++m) {
            const double raw = integrate(
                [&](double x) {
                    return specfun::parabolic_cylinder_d(n, x) *
                           specfun::parabolic_cylinder_d(m, x);
                },
                -30.0, 30.0, 1e-13, 1e-13);
            const double scale =
                std::exp(0.5 * (specfun::ln_gamma(n + 1.0) + specfun::ln_gamma(m + 1.0))) *
                std::sqrt(2.0 * std::numbers::pi);
            worst_orth = std::max(worst_orth, std::abs(raw / scale - (n == m ? 1.0 : 0.0)));
        }
    }

    double worst_rec = 0.0;
    for (int n = 0; n <= 20; ++n) {
        for (int i = 0; i <= 29; ++i) {
            const double z = -10.0 + i * (20.0 / 29.0);
            {
                // Hermite vs explicit coefficient sum
                long double sum = 0.0L, scl = 0.0L;
                for (int m2 = 0; 2 * m2 <= n; ++m2) {
                    long double term = 1.0L;
                    for (int j = n - 2 * m2 + 1; j <= n; ++j) term *= j;
                    for (int j = 1; j <= m2; ++j) term /= j;
                    const long double pw = std::pow(2.0L * (long double)z, (long double)(n - 2 * m2));
                    sum += (m2 % 2 ? -term * pw : term * pw);
                    scl += term * std::abs(pw);
                }
                worst_rec = std::max(
                    worst_rec, std::abs(specfun::hermite_phys(n, z) - double(sum)) /
                                   std::max(1.0, double(scl)));
            }
            if (z >= 0.0) {
                long double sum = 0.0L, scl = 0.0L;
                const long double alpha = 1.5L;
                for (int k = 0; k <= n; ++k) {
                    long double binom = 1.0L;
                    for (int j = 1; j <= n - k; ++j) binom *= (alpha + k + j) / j;
                    long double term = binom;
                    for (int j = 1; j <= k; ++j) term *= (long double)z / j;
                    sum += (k % 2 ? -term : term);
                    scl += term;
                }
                worst_rec = std::max(
                    worst_rec, std::abs(specfun::laguerre_assoc(n, 1.5, z) - double(sum)) /
                                   std::max(1.0, double(scl)));
            }
        }
    }
    const bool pass = worst_orth < 1e-8 && worst_rec < 1e-10;
    return {pass, "max orthonormality defect = " + fmt(worst_orth) +
                      " (tol 1e-8), max recurrence-vs-sum = " + fmt(worst_rec) + " (tol 1e-10)"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"model A eigenvalues vs grid oracle (n <= 10, 1e-6)", criterion_1},
        {"model B eigenvalues vs half-line oracle (n <= 8, 1e-5)", criterion_2},
        {"WKB quantization exactness (n <= 10, 1e-8)", criterion_3},
        {"first-order Taylor defect ratio 4 +- 0.8", criterion_4},
        {"TDSE residuals < 1e-4 and CN overlap > 0.999", criterion_5},
        {"uncertainty bound and sin(2wt)=0 equality pattern", criterion_6},
        {"closed-form observables vs quadrature (1e-7)", criterion_7},
        {"autocorrelation: A(0)=1, presets, gap monotonicity", criterion_8},
        {"phase continuity and dalpha/dt identity", criterion_9},
        {"special-function orthonormality and recurrences", criterion_10},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome out{false, "exception"};
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  [%zu] %s -- %s\n", out.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
