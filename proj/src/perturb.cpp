#include "lrtrap/perturb.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace lrtrap {

double perturbation_parameter(const ModelConfig& cfg) {
    return cfg.tag == ModelTag::stark_quadratic ? cfg.c_kappa : cfg.E0;
}

ModelConfig unperturbed_config(const ModelConfig& cfg) {
    ModelConfig c = cfg;
    if (cfg.tag == ModelTag::stark_quadratic)
        c.c_kappa = 0.0;
    else
        c.E0 = 0.0;
    return c;
}

FirstOrderEigenvalue lambda_first_order(const ModelConfig& cfg, int n) {
    if (n < 0) throw std::invalid_argument("lambda_first_order: n must be >= 0");
    cfg.validate();
    const double st = std::sqrt(cfg.tau);
    if (cfg.tag == ModelTag::stark_quadratic) {
        const double l0 = (n + 0.5) * cfg.hbar * cfg.m * st - cfg.E0 * cfg.E0 / (2.0 * cfg.tau);
        const double l1 = (n + 0.5) * cfg.hbar / st + cfg.E0 * cfg.E0 / (cfg.m * cfg.tau * cfg.tau);
        return {l0, l1};
    }
    const double level = 2.0 * n + 1.0 + 0.5 * cfg.gk_b();
    return {cfg.hbar * cfg.m * st * level, cfg.hbar * level / st};
}

std::vector<MixTerm> mixing_terms(const ModelConfig& cfg, int n) {
    if (n < 0) throw std::invalid_argument("mixing_terms: n must be >= 0");
    cfg.validate();
    // level spacing of the unperturbed invariant; nonzero for both models
    if (!(cfg.m * std::sqrt(cfg.tau) * cfg.hbar > 0.0))
        throw std::domain_error("mixing_terms: degenerate unperturbed spectrum");

    std::vector<MixTerm> terms;
    const double mt = cfg.m * cfg.tau;
    if (cfg.tag == ModelTag::stark_quadratic) {
        const double stark = std::numbers::sqrt2 * cfg.E0 /
                             (std::sqrt(cfg.hbar) * std::pow(cfg.m, 1.5) * std::pow(cfg.tau, 1.75));
        if (n >= 2) terms.push_back({n - 2, std::sqrt(double(n) * (n - 1.0)) / (4.0 * mt)});
        if (n >= 1) terms.push_back({n - 1, -stark * std::sqrt(double(n))});
        terms.push_back({n + 1, stark * std::sqrt(n + 1.0)});
        terms.push_back({n + 2, -std::sqrt((n + 1.0) * (n + 2.0)) / (4.0 * mt)});
        return terms;
    }
    const double half_b = 0.5 * cfg.gk_b();
    if (n >= 1) terms.push_back({n - 1, -std::sqrt(n * (n + half_b)) / (2.0 * mt)});
    terms.push_back({n + 1, std::sqrt((n + 1.0) * (n + 1.0 + half_b)) / (2.0 * mt)});
    return terms;
}

double phase_first_order(const ModelConfig& cfg, int n, double t) {
    const double lam = lambda_first_order(cfg, n).total(perturbation_parameter(cfg));
    return -lam / (cfg.m * std::sqrt(cfg.tau) * cfg.hbar) * unwrapped_arctan(cfg.omega, cfg.tau, t);
}

Eigenstate eigen_perturbative(const ModelConfig& cfg, int n) {
    const double eps = perturbation_parameter(cfg);
    const ModelConfig base_cfg = unperturbed_config(cfg);
    const double lam = lambda_first_order(cfg, n).total(eps);

    struct Component {
        Eigenstate state;
        double weight;
    };
    auto components = std::make_shared<std::vector<Component>>();
    components->push_back({eigen_exact(base_cfg, n), 1.0});
    for (const MixTerm& term : mixing_terms(cfg, n))
        components->push_back({eigen_exact(base_cfg, term.k), eps * term.coeff});

    auto combine = [components](auto member) {
        return [components, member](double x, double t) {
            cx acc = 0.0;
            for (const auto& c : *components) acc += c.weight * (c.state.*member)(x, t);
            return acc;
        };
    };

    const EPSolution sol(cfg.ep());
    Eigenstate st;
    st.n = n;
    st.lambda = lam;
    st.method = Method::perturbative;
    st.phi = combine(&Eigenstate::phi);
    st.dphi_dx = combine(&Eigenstate::dphi_dx);
    st.d2phi_dx2 = combine(&Eigenstate::d2phi_dx2);
    st.dphi_dt = combine(&Eigenstate::dphi_dt);
    st.phase = [cfg, n](double t) { return phase_first_order(cfg, n, t); };
    st.phase_rate = [cfg, sol, lam](double t) {
        return -lam / (cfg.m * sol.sigma_sq(t) * cfg.hbar);
    };
    return st;
}

}  // namespace lrtrap
