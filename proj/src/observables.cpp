#include "lrtrap/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lrtrap/perturb.hpp"
#include "lrtrap/quadrature.hpp"

namespace lrtrap {

namespace {

struct SigmaPair {
    double s, sd;
};

SigmaPair sigma_pair(const ModelConfig& cfg, double t) {
    const EPSolution sol(cfg.ep());
    return {sol.sigma(t), sol.sigma_dot(t)};
}

// model B level constants, b = 2l+1:
//   C1 = hbar (2n + l + 3/2),  C2 = hbar ((4n+2)l + 2n + 3/2)/(2l+1)
struct GKConstants {
    double c1, c2;
};

GKConstants gk_constants(const ModelConfig& cfg, int n) {
    const auto ell_opt = cfg.gk_ell();
    if (!ell_opt)
        throw std::domain_error(
            "observables: model B closed forms require b = 2l+1 (integer l)");
    const double l = *ell_opt;
    return {cfg.hbar * (2.0 * n + l + 1.5),
            cfg.hbar * ((4.0 * n + 2.0) * l + 2.0 * n + 1.5) / (2.0 * l + 1.0)};
}

}  // namespace

ObservableSet expectations_exact(const ModelConfig& cfg, int n, double t) {
    if (n < 0) throw std::invalid_argument("expectations_exact: n must be >= 0");
    cfg.validate();
    const auto [s, sd] = sigma_pair(cfg, t);
    ObservableSet o;
    o.t = t;
    o.method = Method::exact;
    if (cfg.tag == ModelTag::stark_quadratic) {
        const double k = cfg.stiffness();
        const double np = n + 0.5;
        o.mean_x = -cfg.E0 * s / k;
        o.mean_p = -cfg.m * cfg.E0 * sd / k;
        o.mean_x2 = cfg.E0 * cfg.E0 * s * s / (k * k) + cfg.hbar * np * s * s / std::sqrt(cfg.m * k);
        o.mean_p2 = cfg.m * cfg.m * cfg.E0 * cfg.E0 * sd * sd / (k * k) +
                    cfg.hbar * np * std::sqrt(cfg.m) * (k + cfg.m * s * s * sd * sd) /
                        (s * s * std::sqrt(k));
        o.dxdp = cfg.hbar * np * std::sqrt(1.0 + cfg.m * s * s * sd * sd / k);
        return o;
    }
    const auto [c1, c2] = gk_constants(cfg, n);
    const double a = cfg.gk_a();
    o.mean_x = 0.0;
    o.mean_p = 0.0;
    o.mean_x2 = c1 * s * s / a;
    o.mean_p2 = c2 * a / (s * s) + c1 * cfg.m * cfg.m * sd * sd / a;
    o.dxdp = std::sqrt(c1 * c2 + c1 * c1 * cfg.m * cfg.m * s * s * sd * sd / (a * a));
    return o;
}

ObservableSet expectations_perturbative(const ModelConfig& cfg, int n, double t) {
    if (n < 0) throw std::invalid_argument("expectations_perturbative: n must be >= 0");
    cfg.validate();
    const auto [s, sd] = sigma_pair(cfg, t);
    const double eps = perturbation_parameter(cfg);
    ObservableSet o;
    o.t = t;
    o.method = Method::perturbative;
    const double m = cfg.m, tau = cfg.tau, hbar = cfg.hbar, E0 = cfg.E0;
    const double st = std::sqrt(tau);
    if (cfg.tag == ModelTag::stark_quadratic) {
        const double np = n + 0.5;
        o.mean_x = -E0 * s / (m * tau) + eps * 2.0 * E0 * s / (m * m * tau * tau);
        o.mean_p = -E0 * sd / tau + eps * 2.0 * E0 * sd / (m * tau * tau);
        o.mean_x2 = s * s * (E0 * E0 / (m * m * tau * tau) + hbar * np / (m * st)) -
                    eps * s * s *
                        (4.0 * E0 * E0 / (m * m * m * tau * tau * tau) +
                         hbar * np / (m * m * tau * st));
        o.mean_p2 = E0 * E0 * sd * sd / (tau * tau) + hbar * np * m * st / (s * s) +
                    hbar * np * m * sd * sd / st +
                    eps * (hbar * np / (st * s * s) - 4.0 * E0 * E0 * sd * sd / (m * tau * tau * tau) -
                           hbar * np * sd * sd / (tau * st));
        const double root = std::sqrt(1.0 + s * s * sd * sd / tau);
        o.dxdp = hbar * np * (root - eps * s * s * sd * sd / (m * tau * tau * root));
        return o;
    }
    const auto [c1, c2] = gk_constants(cfg, n);
    o.mean_x = 0.0;
    o.mean_p = 0.0;
    o.mean_x2 = c1 * s * s / (m * st) * (1.0 - eps / (m * tau));
    o.mean_p2 = c2 * (m * tau + eps) / (st * s * s) + c1 * sd * sd * (m * tau - eps) / (tau * st);
    const double p_sq = c1 * c2 + c1 * c1 * s * s * sd * sd / tau;
    const double root = std::sqrt(p_sq);
    o.dxdp = root - eps * c1 * c1 * s * s * sd * sd / (m * tau * tau * root);
    return o;
}

double spatial_extent(const ModelConfig& cfg, int n, double t) {
    const EPSolution sol(cfg.ep());
    const double s = sol.sigma(t);
    const double lam = lambda_exact(cfg, n);
    if (cfg.tag == ModelTag::stark_quadratic) {
        const double k = cfg.stiffness();
        const double bhat = std::numbers::sqrt2 * std::pow(cfg.m * k, 0.25) / std::sqrt(cfg.hbar);
        const double disc = std::sqrt(cfg.m * cfg.E0 * cfg.E0 + 2.0 * lam * k) / std::sqrt(cfg.m);
        return s * ((std::abs(cfg.E0) + disc) / k + 10.0 / bhat);
    }
    const double a = cfg.gk_a();
    return s * (std::sqrt(2.0 * lam) / a + 10.0 * std::sqrt(cfg.hbar / a));
}

namespace {

Eigenstate state_for(const ModelConfig& cfg, int n, Method method) {
    switch (method) {
        case Method::exact: return eigen_exact(cfg, n);
        case Method::perturbative: return eigen_perturbative(cfg, n);
        default:
            throw std::invalid_argument("observables: method must be exact or perturbative");
    }
}

}  // namespace

ObservableSet expectations_quadrature(const ModelConfig& cfg, const Eigenstate& state, double t) {
    const double ext = spatial_extent(cfg, state.n + 2, t) * 1.25;
    const double lo = cfg.tag == ModelTag::goldman_krivchenko ? 0.0 : -ext;
    const double hbar = cfg.hbar;

    const auto moment = [&](auto weight) {
        return integrate([&](double x) { return weight(x); }, lo, ext, 1e-13, 1e-12);
    };
    const double nrm = moment([&](double x) { return std::norm(state.phi(x, t)); });
    const double mx = moment([&](double x) { return x * std::norm(state.phi(x, t)); }) / nrm;
    const double mx2 = moment([&](double x) { return x * x * std::norm(state.phi(x, t)); }) / nrm;
    // <p> = hbar Im int conj(phi) phi'
    const double mp = hbar *
                      moment([&](double x) {
                          return std::imag(std::conj(state.phi(x, t)) * state.dphi_dx(x, t));
                      }) /
                      nrm;
    const double mp2 =
        moment([&](double x) { return std::norm(state.dphi_dx(x, t)); }) * hbar * hbar / nrm;

    ObservableSet o;
    o.t = t;
    o.method = state.method;
    o.mean_x = mx;
    o.mean_p = mp;
    o.mean_x2 = mx2;
    o.mean_p2 = mp2;
    o.dxdp = std::sqrt((mx2 - mx * mx) * (mp2 - mp * mp));
    return o;
}

double autocorrelation(const ModelConfig& cfg, int n, double t, Method method) {
    cfg.validate();
    const Eigenstate st = state_for(cfg, n, method);

    double ext = std::max(spatial_extent(cfg, n, t), spatial_extent(cfg, n, 0.0)) * 1.25;
    double prev = -1.0;
    double value = 0.0;
    for (int pass = 0; pass < 8; ++pass) {
        const double lo = cfg.tag == ModelTag::goldman_krivchenko ? 0.0 : -ext;
        const cx ov = integrate_c(
            [&](double x) { return std::conj(st.psi(x, t)) * st.psi(x, 0.0); }, lo, ext, 1e-13,
            1e-12);
        const double n_t = integrate(
            [&](double x) { return std::norm(st.phi(x, t)); }, lo, ext, 1e-13, 1e-12);
        const double n_0 = integrate(
            [&](double x) { return std::norm(st.phi(x, 0.0)); }, lo, ext, 1e-13, 1e-12);
        value = std::abs(ov) / std::sqrt(n_t * n_0);
        if (prev >= 0.0 && std::abs(value - prev) < 1e-9) return value;
        prev = value;
        ext *= 2.0;
    }
    throw std::runtime_error("autocorrelation: quadrature did not converge under domain doubling");
}

}  // namespace lrtrap
