#include "lrtrap/exact.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lrtrap/specfun.hpp"

namespace lrtrap {

namespace {

constexpr cx kI{0.0, 1.0};

struct SigmaState {
    double s, sd, sdd;
};

SigmaState sigma_at(const EPSolution& sol, double t) {
    return {sol.sigma(t), sol.sigma_dot(t), sol.sigma_ddot(t)};
}

// phi = g(x,t) exp(i m sigma_dot x^2 / (2 sigma hbar)) with real envelope g.
// The chirp derivatives and the sigma chain rule are shared by both models:
//   dphi/dx  = (g' + i th_x g) e^{i th}
//   d2phi/dx2 = (g'' + 2 i th_x g' + (i th_xx - th_x^2) g) e^{i th},
//               g'' = 2 (Vhat(x/sigma) - lambda) g / (hbar sigma)^2... (see below)
//   dphi/dt  = e^{i th} [ -(sd/s)(g/2 + x g') + i g th_t ]
struct Envelope {
    double g;
    double gp;
};

cx chirp(const ModelConfig& cfg, const SigmaState& ss, double x) {
    return std::exp(kI * (cfg.m * ss.sd * x * x / (2.0 * ss.s * cfg.hbar)));
}

cx assemble_phi(const ModelConfig& cfg, const SigmaState& ss, double x, const Envelope& e) {
    return e.g * chirp(cfg, ss, x);
}

cx assemble_dphi_dx(const ModelConfig& cfg, const SigmaState& ss, double x, const Envelope& e) {
    const double th_x = cfg.m * ss.sd * x / (ss.s * cfg.hbar);
    return (e.gp + kI * th_x * e.g) * chirp(cfg, ss, x);
}

cx assemble_d2phi_dx2(const ModelConfig& cfg, const SigmaState& ss, double x, const Envelope& e,
                      double lambda) {
    if (e.g == 0.0 && e.gp == 0.0) return 0.0;  // outside the model's domain
    const double th_x = cfg.m * ss.sd * x / (ss.s * cfg.hbar);
    const double th_xx = cfg.m * ss.sd / (ss.s * cfg.hbar);
    // g satisfies the transformed-invariant ODE in xi = x/sigma:
    // chi'' = 2 (Vhat - lambda) chi / hbar^2, so g''(x) = that / sigma^2.
    const double gpp =
        2.0 * (transformed_potential(cfg, x / ss.s) - lambda) * e.g / (cfg.hbar * cfg.hbar * ss.s * ss.s);
    return (gpp + 2.0 * kI * th_x * e.gp + (kI * th_xx - th_x * th_x) * e.g) * chirp(cfg, ss, x);
}

cx assemble_dphi_dt(const ModelConfig& cfg, const SigmaState& ss, double x, const Envelope& e) {
    const double th_t = cfg.m * x * x / (2.0 * cfg.hbar) * (ss.sdd / ss.s - ss.sd * ss.sd / (ss.s * ss.s));
    const double wt = -(ss.sd / ss.s) * (0.5 * e.g + x * e.gp);
    return (wt + kI * e.g * th_t) * chirp(cfg, ss, x);
}

// ----- model A envelope: N_n D_n(a + bhat x / sigma) -----

struct ParamsA {
    double a, bhat, ln_norm0;  // ln_norm0 at sigma = 1
};

ParamsA params_a(const ModelConfig& cfg, int n) {
    const double k = cfg.stiffness();
    const double mk4 = std::pow(cfg.m * k, 0.25);
    ParamsA p;
    p.bhat = std::numbers::sqrt2 * mk4 / std::sqrt(cfg.hbar);
    p.a = std::numbers::sqrt2 * std::pow(cfg.m, 0.25) * cfg.E0 /
          (std::sqrt(cfg.hbar) * std::pow(k, 0.75));
    p.ln_norm0 = 0.5 * (std::log(p.bhat) - specfun::ln_gamma(n + 1.0) - 0.5 * std::log(2.0 * std::numbers::pi));
    return p;
}

Envelope envelope_a(const ParamsA& p, int n, const SigmaState& ss, double x) {
    const double z = p.a + p.bhat * x / ss.s;
    const double norm = std::exp(p.ln_norm0) / std::sqrt(ss.s);
    const double dn = specfun::parabolic_cylinder_d(n, z);
    const double dn_prime =
        (n > 0 ? n * specfun::parabolic_cylinder_d(n - 1, z) : 0.0) - 0.5 * z * dn;
    return {norm * dn, norm * dn_prime * p.bhat / ss.s};
}

// ----- model B envelope: C_n x^s e^{-u/2} L_n^{b/2}(u), u = a x^2/(hbar sigma^2) -----

struct ParamsB {
    double a, b, s, ln_norm0;
};

ParamsB params_b(const ModelConfig& cfg, int n) {
    ParamsB p;
    p.a = cfg.gk_a();
    p.b = cfg.gk_b();
    p.s = 0.5 * (1.0 + p.b);
    // half-line normalization: int_0^inf |phi|^2 dx = 1
    p.ln_norm0 = 0.5 * (std::log(2.0) + specfun::ln_gamma(n + 1.0) - specfun::ln_gamma(n + 1.0 + 0.5 * p.b)) +
                 0.25 * (2.0 + p.b) * std::log(p.a / cfg.hbar);
    return p;
}

Envelope envelope_b(const ParamsB& p, int n, const ModelConfig& cfg, const SigmaState& ss, double x) {
    if (x <= 0.0) return {0.0, 0.0};
    const double u = p.a * x * x / (cfg.hbar * ss.s * ss.s);
    const double norm = std::exp(p.ln_norm0) * std::pow(ss.s, -0.5 * (2.0 + p.b));
    const double ln = specfun::laguerre_assoc(n, 0.5 * p.b, u);
    const double ln_deriv_term =
        n > 0 ? -2.0 * u * specfun::laguerre_assoc(n - 1, 0.5 * p.b + 1.0, u) : 0.0;
    const double xs = std::pow(x, p.s);
    const double damp = std::exp(-0.5 * u);
    const double g = norm * xs * damp * ln;
    const double gp = norm * std::pow(x, p.s - 1.0) * damp * ((p.s - u) * ln + ln_deriv_term);
    return {g, gp};
}

}  // namespace

cx Eigenstate::psi(double x, double t) const { return std::exp(kI * phase(t)) * phi(x, t); }

cx Eigenstate::dpsi_dt(double x, double t) const {
    return std::exp(kI * phase(t)) * (kI * phase_rate(t) * phi(x, t) + dphi_dt(x, t));
}

double unwrapped_arctan(double omega, double tau, double t) {
    const double theta = omega * t;
    const double k = std::floor(theta / std::numbers::pi + 0.5);
    const double th = theta - k * std::numbers::pi;  // in [-pi/2, pi/2)
    return std::atan(std::sqrt(tau) * std::tan(th) / omega) + k * std::numbers::pi;
}

cx unitary_map_weight(const ModelConfig& cfg, double t, double x) {
    const EPSolution sol(cfg.ep());
    return chirp(cfg, sigma_at(sol, t), x);
}

double transformed_potential(const ModelConfig& cfg, double xi) {
    if (cfg.tag == ModelTag::stark_quadratic) {
        const double k = cfg.stiffness();
        return 0.5 * cfg.m * k * xi * xi + cfg.m * cfg.E0 * xi;
    }
    const double a = cfg.gk_a();
    const double mo = cfg.m * cfg.Omega;
    return 0.5 * a * a * xi * xi + 0.5 * mo * mo / (xi * xi);
}

double lambda_exact(const ModelConfig& cfg, int n) {
    if (n < 0) throw std::invalid_argument("lambda_exact: n must be >= 0");
    cfg.validate();
    if (cfg.tag == ModelTag::stark_quadratic) {
        const double k = cfg.stiffness();
        return (n + 0.5) * cfg.hbar * std::sqrt(cfg.m * k) - cfg.m * cfg.E0 * cfg.E0 / (2.0 * k);
    }
    return cfg.hbar * cfg.gk_a() * (2.0 * n + 1.0 + 0.5 * cfg.gk_b());
}

double lr_phase(const ModelConfig& cfg, int n, double t) {
    const double lam = lambda_exact(cfg, n);
    return -lam / (cfg.m * std::sqrt(cfg.tau) * cfg.hbar) * unwrapped_arctan(cfg.omega, cfg.tau, t);
}

namespace {

Eigenstate finish_state(const ModelConfig& cfg, int n, double lambda, Method method,
                        std::function<Envelope(const SigmaState&, double)> env) {
    const EPSolution sol(cfg.ep());
    Eigenstate st;
    st.n = n;
    st.lambda = lambda;
    st.method = method;
    st.phi = [cfg, sol, env](double x, double t) {
        const auto ss = sigma_at(sol, t);
        return assemble_phi(cfg, ss, x, env(ss, x));
    };
    st.dphi_dx = [cfg, sol, env](double x, double t) {
        const auto ss = sigma_at(sol, t);
        return assemble_dphi_dx(cfg, ss, x, env(ss, x));
    };
    st.d2phi_dx2 = [cfg, sol, env, lambda](double x, double t) {
        const auto ss = sigma_at(sol, t);
        return assemble_d2phi_dx2(cfg, ss, x, env(ss, x), lambda);
    };
    st.dphi_dt = [cfg, sol, env](double x, double t) {
        const auto ss = sigma_at(sol, t);
        return assemble_dphi_dt(cfg, ss, x, env(ss, x));
    };
    st.phase = [cfg, lambda](double t) {
        return -lambda / (cfg.m * std::sqrt(cfg.tau) * cfg.hbar) *
               unwrapped_arctan(cfg.omega, cfg.tau, t);
    };
    st.phase_rate = [cfg, sol, lambda](double t) {
        return -lambda / (cfg.m * sol.sigma_sq(t) * cfg.hbar);
    };
    return st;
}

}  // namespace

Eigenstate eigen_a(const ModelConfig& cfg, int n) {
    if (cfg.tag != ModelTag::stark_quadratic)
        throw std::invalid_argument("eigen_a: config is not the Stark model");
    if (!(2.0 * cfg.c_kappa + cfg.m * cfg.tau > 0.0))
        throw std::domain_error("eigen_a: spectrum unbounded, 2 c_kappa + m tau <= 0");
    const double lambda = lambda_exact(cfg, n);
    const ParamsA p = params_a(cfg, n);
    auto env = [p, n](const SigmaState& ss, double x) { return envelope_a(p, n, ss, x); };
    return finish_state(cfg, n, lambda, Method::exact, env);
}

Eigenstate eigen_b(const ModelConfig& cfg, int n) {
    if (cfg.tag != ModelTag::goldman_krivchenko)
        throw std::invalid_argument("eigen_b: config is not the Goldman-Krivchenko model");
    const double lambda = lambda_exact(cfg, n);
    const ParamsB p = params_b(cfg, n);
    auto env = [p, n, cfg](const SigmaState& ss, double x) { return envelope_b(p, n, cfg, ss, x); };
    return finish_state(cfg, n, lambda, Method::exact, env);
}

Eigenstate eigen_exact(const ModelConfig& cfg, int n) {
    return cfg.tag == ModelTag::stark_quadratic ? eigen_a(cfg, n) : eigen_b(cfg, n);
}

cx psi_full(const ModelConfig& cfg, int n, double x, double t) {
    return eigen_exact(cfg, n).psi(x, t);
}

}  // namespace lrtrap
