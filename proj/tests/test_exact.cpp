#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lrtrap/exact.hpp"
#include "lrtrap/oracle.hpp"
#include "lrtrap/quadrature.hpp"
#include "support/matrix_elements.hpp"
#include "support/oracles.hpp"

using namespace lrtrap;

TEST_CASE("unitary map weight: unit modulus and chirp phase") {
    const auto cfg = ModelConfig::stark(3.0, 0.5, 1.0, 2.0, 0.1);
    CHECK(std::abs(unitary_map_weight(cfg, 0.0, 1.7) - cx(1.0, 0.0)) < 1e-14);

    const auto flat = ModelConfig::stark(3.0, 1.0, 1.0, 2.0, 0.1);
    CHECK(std::abs(unitary_map_weight(flat, 2.9, 1.7) - cx(1.0, 0.0)) < 1e-13);

    const EPSolution sol(cfg.ep());
    for (const double t : {0.8, 2.3}) {
        for (const double x : {-1.2, 0.4, 2.0}) {
            const cx w = unitary_map_weight(cfg, t, x);
            CHECK(std::abs(std::abs(w) - 1.0) < 1e-14);
            // phase equals -delta/(alpha) x^2 / (2 hbar) with delta = -m s sd
            const double expect = cfg.m * sol.sigma_dot(t) * x * x / (2.0 * sol.sigma(t));
            CHECK(std::arg(w) == doctest::Approx(std::remainder(expect, 2.0 * std::numbers::pi))
                                     .epsilon(1e-10));
        }
    }
}

TEST_CASE("model A eigenvalues: harmonic limit and oracle anchor") {
    const auto ho = ModelConfig::stark(1.0, 1.0, 1.0, 0.0, 0.0);
    for (int n = 0; n <= 6; ++n)
        CHECK(lambda_exact(ho, n) == doctest::Approx(n + 0.5).epsilon(1e-14));

    const auto cfg = ModelConfig::stark(1.0, 1.0, 1.0, 1.0, 0.2);
    CHECK(lambda_exact(cfg, 0) == doctest::Approx(0.23446512116710444).epsilon(1e-12));

    const auto pairs = diagonalize_invariant_refined(cfg, default_grid(cfg, 4, 4096), 3);
    for (int n = 0; n < 3; ++n)
        CHECK(std::abs(pairs[n].lambda - lambda_exact(cfg, n)) <
              1e-6 * std::max(1.0, std::abs(lambda_exact(cfg, n))));
}

TEST_CASE("model A wavefunction matches the grid eigenvector (c_kappa = 0.18, n = 1)") {
    const auto cfg = ModelConfig::stark(1.0, 0.5, 1.0, 1.0, 0.18);
    const Grid grid = default_grid(cfg, 4, 4096);
    const auto pairs = diagonalize_invariant_refined(cfg, grid, 2);
    const Eigenstate st = eigen_a(cfg, 1);

    // at t = 0 (sigma = 1) phi(x) equals the transformed eigenfunction chi(xi)
    std::vector<double> mine(grid.n);
    double nrm = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        mine[i] = st.phi(grid.point(i), 0.0).real();
        nrm += mine[i] * mine[i];
    }
    nrm = std::sqrt(nrm * grid.spacing());
    double align = 0.0;
    for (int i = 0; i < grid.n; ++i) align += mine[i] / nrm * pairs[1].vec[i];
    const double sign = align >= 0.0 ? 1.0 : -1.0;
    double err2 = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const double d = mine[i] / nrm - sign * pairs[1].vec[i];
        err2 += d * d;
    }
    CHECK(std::sqrt(err2 * grid.spacing()) < 1e-4);
}

TEST_CASE("model B eigenvalues: anchors and half-line oracle") {
    const auto cfg0 = ModelConfig::gk_from_ell(1.0, 1.0, 1.0, 0.0, 1);
    CHECK(lambda_exact(cfg0, 0) == doctest::Approx(2.5).epsilon(1e-13));

    const auto cfg1 = ModelConfig::gk_from_ell(1.0, 1.0, 1.0, 0.5, 1);
    CHECK(lambda_exact(cfg1, 0) ==
          doctest::Approx(std::numbers::sqrt2 * 2.5).epsilon(1e-13));

    const auto pairs = diagonalize_invariant_refined(cfg1, default_grid(cfg1, 4, 4096), 3);
    for (int n = 0; n < 3; ++n)
        CHECK(std::abs(pairs[n].lambda - lambda_exact(cfg1, n)) <
              1e-5 * std::abs(lambda_exact(cfg1, n)));
}

TEST_CASE("normalization of both models at several times") {
    const auto cfg_a = ModelConfig::stark(1.0, 0.5, 1.0, 1.0, 0.2);
    const auto cfg_b = ModelConfig::gk_from_ell(1.0, 0.5, 1.0, 0.4, 2);
    for (const auto& cfg : {cfg_a, cfg_b}) {
        for (int n = 0; n <= 5; ++n) {
            const Eigenstate st = eigen_exact(cfg, n);
            for (const double t : {0.0, 1.2, 3.9}) {
                const cx nn = melems::overlap_element(cfg, st, st, t);
                CHECK(std::abs(nn - 1.0) < 1e-8);
            }
        }
    }
}

TEST_CASE("orthonormality at sampled times") {
    const auto cfg_a = ModelConfig::stark(1.0, 0.7, 1.3, 0.9, 0.15);
    const auto cfg_b = ModelConfig::gk_from_ell(1.0, 0.7, 1.3, 0.3, 1);
    for (const auto& cfg : {cfg_a, cfg_b}) {
        std::vector<Eigenstate> states;
        for (int n = 0; n <= 5; ++n) states.push_back(eigen_exact(cfg, n));
        for (const double t : {0.0, 1.7}) {
            for (int n = 0; n <= 5; ++n) {
                for (int m = 0; m <= n; ++m) {
                    const cx ov = melems::overlap_element(cfg, states[m], states[n], t);
                    CHECK(std::abs(ov - (m == n ? 1.0 : 0.0)) < 1e-8);
                }
            }
        }
    }
}

TEST_CASE("eigenvalues are constant in time via <phi|I(t)|phi>") {
    const auto cfg_a = ModelConfig::stark(1.0, 0.5, 1.0, 1.0, 0.2);
    const auto cfg_b = ModelConfig::gk_from_ell(1.0, 0.5, 1.0, 0.4, 1);
    for (const auto& cfg : {cfg_a, cfg_b}) {
        const EPSolution sol(cfg.ep());
        for (int n = 0; n <= 3; ++n) {
            const Eigenstate st = eigen_exact(cfg, n);
            for (int i = 0; i <= 6; ++i) {
                const double t = sol.period() * i / 6.0;
                const cx lam = melems::invariant_element(cfg, st, st, t);
                CHECK(std::abs(lam - st.lambda) < 1e-7 * std::max(1.0, std::abs(st.lambda)));
            }
        }
    }
}

TEST_CASE("phase identity: <phi| i hbar d_t - H |phi> = -lambda/(m sigma^2)") {
    const auto cfg_a = ModelConfig::stark(1.0, 0.5, 1.0, 1.0, 0.2);
    const auto cfg_b = ModelConfig::gk_from_ell(1.0, 0.5, 1.0, 0.4, 1);
    for (const auto& cfg : {cfg_a, cfg_b}) {
        const EPSolution sol(cfg.ep());
        for (int n = 0; n <= 2; ++n) {
            const Eigenstate st = eigen_exact(cfg, n);
            for (int i = 0; i < 10; ++i) {
                const double t = 0.09 + sol.period() * i / 9.0;
                const cx elem = melems::schroedinger_element(cfg, st, st, t);
                const double expect = -st.lambda / (cfg.m * sol.sigma_sq(t));
                CHECK(std::abs(elem - expect) < 1e-6 * std::max(1.0, std::abs(expect)));
            }
        }
    }
}

TEST_CASE("Lewis-Riesenfeld phase: gauge, degenerate limit, quadrature oracle") {
    const auto cfg = ModelConfig::stark(3.0, 0.5, 1.0, 2.0, 0.1);
    for (int n = 0; n <= 3; ++n) CHECK(lr_phase(cfg, n, 0.0) == 0.0);

    // omega = sqrt(tau): alpha = -lambda t / (m hbar)
    const auto flat = ModelConfig::stark(2.0, std::sqrt(1.3), 1.3, 0.6, 0.2);
    for (int n = 0; n <= 3; ++n) {
        const double lam = lambda_exact(flat, n);
        for (const double t : {0.7, 2.9})
            CHECK(lr_phase(flat, n, t) == doctest::Approx(-lam * t / flat.m).epsilon(1e-10));
    }

    // adaptive quadrature of -lambda/(m sigma^2 hbar)
    const EPSolution sol(cfg.ep());
    for (int n = 0; n <= 2; ++n) {
        const double lam = lambda_exact(cfg, n);
        const double target = integrate(
            [&](double u) { return -lam / (cfg.m * sol.sigma_sq(u)); }, 0.0, 2.0, 1e-13, 1e-13);
        CHECK(lr_phase(cfg, n, 2.0) == doctest::Approx(target).epsilon(1e-9));
    }
}

TEST_CASE("phase continuity across the arctan branch points") {
    const auto cfg = ModelConfig::stark(3.0, 0.5, 1.0, 2.0, 0.1);
    const EPSolution sol(cfg.ep());
    const double t_branch = 0.5 * std::numbers::pi / cfg.omega;
    for (int k = 1; k <= 3; ++k) {
        const double t0 = k * t_branch * 2.0 - t_branch;  // omega t = pi/2 + (k-1) pi
        const double delta = 1e-10;
        const double jump = std::abs(lr_phase(cfg, 1, t0 + delta) - lr_phase(cfg, 1, t0 - delta));
        CHECK(jump < 1e-9);
    }
    // derivative matches -lambda/(m sigma^2 hbar)
    for (const double t : {0.4, t_branch - 0.05, t_branch + 0.05, 5.2}) {
        const double fd =
            oracles::fd_derivative([&](double u) { return lr_phase(cfg, 2, u); }, t, 1e-5);
        const double expect = -lambda_exact(cfg, 2) / (cfg.m * sol.sigma_sq(t));
        CHECK(fd == doctest::Approx(expect).epsilon(1e-6));
    }
}

TEST_CASE("psi_full: gauge at t = 0 and modulus equality") {
    const auto cfg = ModelConfig::stark(1.0, 0.5, 1.0, 1.0, 0.1);
    const Eigenstate st = eigen_exact(cfg, 2);
    for (const double x : {-1.1, 0.3, 2.2}) {
        CHECK(std::abs(psi_full(cfg, 2, x, 0.0) - st.phi(x, 0.0)) < 1e-12);
        for (const double t : {0.9, 2.4})
            CHECK(std::abs(std::abs(st.psi(x, t)) - std::abs(st.phi(x, t))) < 1e-13);
    }
}

TEST_CASE("analytic solutions satisfy the TDSE on the grid") {
    const auto cfg_a = ModelConfig::stark(1.0, 0.5, 1.0, 1.0, 0.1);
    const Grid grid_a = Grid::symmetric(16.0, 16384);
    const auto cfg_b = ModelConfig::gk_from_ell(1.0, 0.5, 1.0, 0.3, 1);
    const Grid grid_b{14.0 / 8192, 14.0, 8192};
    const EPSolution sol(cfg_a.ep());
    for (int n = 0; n <= 2; ++n) {
        const Eigenstate sa = eigen_exact(cfg_a, n);
        const Eigenstate sb = eigen_exact(cfg_b, n);
        for (const double t : {0.0, 0.31 * sol.period(), 0.77 * sol.period()}) {
            CHECK(tdse_residual(
                      cfg_a, [&](double x, double tt) { return sa.psi(x, tt); }, t, grid_a) < 1e-4);
            CHECK(tdse_residual(
                      cfg_b, [&](double x, double tt) { return sb.psi(x, tt); }, t, grid_b) < 1e-4);
        }
    }
}

TEST_CASE("model dispatch and domain errors") {
    const auto cfg_a = ModelConfig::stark(1.0, 1.0, 1.0, 0.5, 0.1);
    const auto cfg_b = ModelConfig::gk_from_ell(1.0, 1.0, 1.0, 0.2, 1);
    CHECK_THROWS_AS(eigen_a(cfg_b, 0), std::invalid_argument);
    CHECK_THROWS_AS(eigen_b(cfg_a, 0), std::invalid_argument);
    CHECK_THROWS_AS(lambda_exact(cfg_a, -1), std::invalid_argument);
    CHECK_THROWS_AS(ModelConfig::gk(1.0, 1.0, 1.0, -0.9, 1.0), std::invalid_argument);

    // model B states vanish on the closed negative axis
    const Eigenstate st = eigen_b(cfg_b, 1);
    CHECK(std::abs(st.phi(-1.0, 0.4)) == 0.0);
    CHECK(std::abs(st.phi(0.0, 0.4)) == 0.0);
}
