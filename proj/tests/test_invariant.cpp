#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lrtrap/invariant.hpp"
#include "lrtrap/quadrature.hpp"
#include "support/matrix_elements.hpp"
#include "support/oracles.hpp"

using namespace lrtrap;

namespace {

EPConfig ep_cfg(double omega, double tau, double m = 1.0, double E0 = 0.0) {
    EPConfig c;
    c.omega = omega;
    c.tau = tau;
    c.m = m;
    c.E0 = E0;
    return c;
}

}  // namespace

TEST_CASE("coeffs_at: degenerate and t = 0 anchors") {
    PotentialSeries none;
    {
        const auto c = coeffs_at(ep_cfg(std::sqrt(1.8), 1.8, 2.0, 0.7), none, 1.3);
        CHECK(c.alpha == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(c.delta) < 1e-12);
        CHECK(c.epsilon == doctest::Approx(4.0 * 1.8).epsilon(1e-12));
        CHECK(c.gamma == doctest::Approx(2.0 * 2.0 * 0.7).epsilon(1e-12));
    }
    {
        const auto c = coeffs_at(ep_cfg(0.5, 1.0, 3.0), none, 0.0);
        CHECK(c.alpha == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(c.delta) < 1e-14);
    }
    {
        const double t = 0.5 * std::numbers::pi;
        const auto c = coeffs_at(ep_cfg(0.5, 1.0, 3.0), none, t);
        CHECK(c.alpha == doctest::Approx(2.5).epsilon(1e-13));
        const EPSolution sol(ep_cfg(0.5, 1.0, 3.0));
        const double ssd_fd = 0.5 * oracles::fd_derivative(
                                        [&](double u) { return sol.sigma_sq(u); }, t, 1e-4);
        CHECK(c.delta == doctest::Approx(-3.0 * ssd_fd).epsilon(1e-8));
    }
}

TEST_CASE("constraint system residuals under finite differences") {
    const EPConfig cfg = ep_cfg(0.7, 1.6, 2.2, 0.9);
    PotentialSeries series;
    series.terms = {{-2.0, 1.0, 0.8}, {2.0, 1.0, 1.1}, {4.0, 1.0, -0.4}};
    const EPSolution sol(cfg);
    const double h = 1e-4;
    const auto coeff_fd = [&](auto pick, double t) {
        const auto f = [&](double u) { return pick(coeffs_at(cfg, series, u)); };
        return (-f(t + 2 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2 * h)) / (12.0 * h);
    };
    for (const double t : {0.3, 1.1, 2.6, 4.8}) {
        const auto c = coeffs_at(cfg, series, t);
        const double adot = coeff_fd([](const InvariantCoeffs& q) { return q.alpha; }, t);
        const double ddot = coeff_fd([](const InvariantCoeffs& q) { return q.delta; }, t);
        const double edot = coeff_fd([](const InvariantCoeffs& q) { return q.epsilon; }, t);
        const double gdot = coeff_fd([](const InvariantCoeffs& q) { return q.gamma; }, t);
        CHECK(std::abs(adot + 2.0 * c.delta / cfg.m) < 1e-8);
        CHECK(std::abs(ddot - cfg.m * c.alpha * cfg.omega * cfg.omega + c.epsilon / cfg.m) < 1e-8);
        CHECK(std::abs(edot - 2.0 * cfg.m * c.delta * cfg.omega * cfg.omega) < 1e-8);
        // overdetermination: gamma = 2 m alpha E and gamma_dot = 2 delta E together
        CHECK(c.gamma == doctest::Approx(2.0 * cfg.m * c.alpha * sol.field(t)).epsilon(1e-12));
        CHECK(std::abs(gdot - 2.0 * c.delta * sol.field(t)) < 1e-8);
        // beta_p constraint for monomials: beta_dot = p delta kappa_p
        for (size_t j = 0; j < series.terms.size(); ++j) {
            const double p = series.terms[j].p;
            const double bdot = coeff_fd(
                [j](const InvariantCoeffs& q) { return q.beta_terms[j].second; }, t);
            const double kap = sol.kappa_p(p, series.terms[j].c_tilde, t);
            CHECK(std::abs(bdot - p * c.delta * kap) < 1e-8);
        }
    }
}

TEST_CASE("Gaussian expansion: coefficients and series remainder") {
    const auto s1 = expand_gaussian(1);
    REQUIRE(s1.terms.size() == 1);
    CHECK(s1.terms[0].p == 2.0);
    CHECK(s1.terms[0].c_p == 1.0);
    CHECK(s1.terms[0].c_tilde == doctest::Approx(-1.0));

    const auto s2 = expand_gaussian(2);
    REQUIRE(s2.terms.size() == 2);
    CHECK(s2.terms[1].p == 4.0);
    CHECK(s2.terms[1].c_tilde == doctest::Approx(0.5));

    // partial sums at sigma = 1 approach e^{-x^2} - 1 with factorial remainder
    for (const int order : {3, 5, 8}) {
        const auto s = expand_gaussian(order);
        for (double x = -1.6; x <= 1.6; x += 0.4) {
            double sum = 0.0;
            for (const auto& term : s.terms) sum += term.c_tilde * std::pow(x, term.p);
            const double target = std::exp(-x * x) - 1.0;
            double bound = std::pow(x * x, order + 1);
            for (int j = 1; j <= order + 1; ++j) bound /= j;
            CHECK(std::abs(sum - target) <= bound + 1e-15);
        }
    }

    CHECK_THROWS_AS(expand_gaussian(0), std::invalid_argument);
}

TEST_CASE("soft-Coulomb expansion: double-factorial coefficients") {
    const auto s1 = expand_soft_coulomb(1, 1.0);
    CHECK(s1.terms[0].c_tilde == doctest::Approx(-0.5).epsilon(1e-15));
    const auto s2 = expand_soft_coulomb(2, 1.0);
    CHECK(s2.terms[1].c_tilde == doctest::Approx(0.375).epsilon(1e-15));

    // against an independent integer-loop (2n-1)!!/(2n)!! k^{-(1+2n)} build
    for (const double k : {0.7, 1.0, 2.3}) {
        const auto s = expand_soft_coulomb(6, k);
        for (int n = 1; n <= 6; ++n) {
            long double num = 1.0L, den = 1.0L;
            for (int j = 2 * n - 1; j >= 1; j -= 2) num *= j;
            for (int j = 2 * n; j >= 2; j -= 2) den *= j;
            const long double expect =
                (n % 2 ? -1.0L : 1.0L) * num / den * std::pow((long double)k, -(1.0L + 2 * n));
            CHECK(s.terms[n - 1].c_tilde == doctest::Approx(double(expect)).epsilon(1e-13));
        }
    }

    // Taylor-coefficient oracle: Richardson-extrapolated central differences
    // of f(x) = 1/sqrt(x^2 + k^2) reproduce the low-order coefficients
    {
        const double k = 1.3;
        const auto f = [k](long double x) { return 1.0L / std::sqrt(x * x + k * k); };
        const auto second = [&](long double h) { return (f(h) - 2.0L * f(0.0L) + f(-h)) / (h * h); };
        const auto fourth = [&](long double h) {
            return (f(2 * h) - 4.0L * f(h) + 6.0L * f(0.0L) - 4.0L * f(-h) + f(-2 * h)) /
                   (h * h * h * h);
        };
        // two-level Richardson in h^2
        const auto richardson = [](long double coarse, long double fine) {
            return fine + (fine - coarse) / 3.0L;
        };
        const long double c2 =
            richardson(second(0.02L), second(0.01L)) / 2.0L;  // f''(0)/2!
        const long double c4 =
            richardson(fourth(0.04L), fourth(0.02L)) / 24.0L;  // f^{(4)}(0)/4!
        const auto s = expand_soft_coulomb(2, k);
        CHECK(double(c2) == doctest::Approx(s.terms[0].c_tilde).epsilon(1e-5));
        CHECK(double(c4) == doctest::Approx(s.terms[1].c_tilde).epsilon(1e-4));
    }

    CHECK_THROWS_AS(expand_soft_coulomb(2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(expand_soft_coulomb(0, 1.0), std::invalid_argument);
}

TEST_CASE("model invariants: coefficient anchors") {
    {
        // harmonic limit of model A
        const auto cfg = ModelConfig::stark(1.0, std::sqrt(1.4), 1.4, 0.0, 0.0);
        const auto c = invariant_quadratic_form(cfg, 0.9);
        CHECK(c.alpha == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(c.delta) < 1e-12);
        CHECK(c.epsilon_total() == doctest::Approx(1.4).epsilon(1e-12));
        CHECK(std::abs(c.gamma) < 1e-15);
    }
    {
        // model A at t = 0: x^2 coefficient m^2 tau + 2 m c_kappa
        const auto cfg = ModelConfig::stark(2.0, 0.5, 1.1, 0.8, 0.3);
        const auto c = invariant_quadratic_form(cfg, 0.0);
        CHECK(c.epsilon_total() ==
              doctest::Approx(4.0 * 1.1 + 2.0 * 2.0 * 0.3).epsilon(1e-12));
        CHECK(c.gamma == doctest::Approx(2.0 * 2.0 * 0.8).epsilon(1e-12));
    }
    {
        // model B: x^2 coefficient m^2 sd^2 + (tau m^2 + 2 m E0)/s^2 at any t
        const auto cfg = ModelConfig::gk_from_ell(2.0, 0.6, 1.3, 0.4, 1);
        const EPSolution sol(cfg.ep());
        for (const double t : {0.0, 0.7, 2.1}) {
            const auto c = invariant_quadratic_form(cfg, t);
            const double s = sol.sigma(t), sd = sol.sigma_dot(t);
            const double expect =
                4.0 * sd * sd + (1.3 * 4.0 + 2.0 * 2.0 * 0.4) / (s * s);
            CHECK(c.epsilon_total() == doctest::Approx(expect).epsilon(1e-11));
            CHECK(c.gamma == 0.0);
            // inverse-square coefficient m^2 sigma^2 Omega^2
            REQUIRE(c.beta_terms.size() == 2);
            CHECK(c.beta_terms[1].first == -2.0);
            CHECK(c.beta_terms[1].second ==
                  doctest::Approx(4.0 * s * s * cfg.Omega * cfg.Omega).epsilon(1e-11));
        }
    }
}

TEST_CASE("invariance: matrix elements of dI/dt vanish for both models") {
    const auto cfg_a = ModelConfig::stark(1.0, 0.6, 1.2, 0.8, 0.15);
    const auto cfg_b = ModelConfig::gk_from_ell(1.0, 0.6, 1.2, 0.3, 1);
    for (const auto& cfg : {cfg_a, cfg_b}) {
        std::vector<Eigenstate> states;
        for (int n = 0; n <= 3; ++n) states.push_back(eigen_exact(cfg, n));
        for (const double t : {0.25, 1.4, 3.3}) {
            for (int n = 0; n <= 3; ++n) {
                for (int m = 0; m <= 3; ++m) {
                    const cx defect = melems::invariance_defect(cfg, states[m], states[n], t);
                    CHECK(std::abs(defect) < 1e-6);
                }
            }
        }
    }
}
