#include "lrtrap/models.hpp"

#include <cmath>
#include <stdexcept>

namespace lrtrap {

std::string to_string(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::perturbative: return "perturbative";
        case Method::wkb: return "wkb";
        case Method::oracle: return "oracle";
    }
    return "?";
}

std::optional<Method> method_from_string(const std::string& s) {
    if (s == "exact") return Method::exact;
    if (s == "perturbative" || s == "pert") return Method::perturbative;
    if (s == "wkb") return Method::wkb;
    if (s == "oracle") return Method::oracle;
    return std::nullopt;
}

ModelConfig ModelConfig::stark(double m, double omega, double tau, double E0, double c_kappa,
                               double hbar) {
    ModelConfig c;
    c.tag = ModelTag::stark_quadratic;
    c.m = m; c.omega = omega; c.tau = tau; c.E0 = E0; c.c_kappa = c_kappa; c.hbar = hbar;
    c.validate();
    return c;
}

ModelConfig ModelConfig::gk(double m, double omega, double tau, double E0, double Omega,
                            double hbar) {
    ModelConfig c;
    c.tag = ModelTag::goldman_krivchenko;
    c.m = m; c.omega = omega; c.tau = tau; c.E0 = E0; c.Omega = Omega; c.hbar = hbar;
    c.validate();
    return c;
}

ModelConfig ModelConfig::gk_from_ell(double m, double omega, double tau, double E0, int ell,
                                     double hbar) {
    if (ell < 0) throw std::invalid_argument("ModelConfig: ell must be >= 0");
    const double Omega = hbar * std::sqrt(double(ell) * (ell + 1.0)) / m;
    return gk(m, omega, tau, E0, Omega, hbar);
}

void ModelConfig::validate() const {
    ep().validate();
    if (tag == ModelTag::stark_quadratic) {
        if (c_kappa < 0.0) throw std::invalid_argument("ModelConfig: c_kappa must be >= 0");
        if (!(2.0 * c_kappa + m * tau > 0.0))
            throw std::invalid_argument("ModelConfig: 2 c_kappa + m tau must be > 0");
    } else {
        if (Omega < 0.0) throw std::invalid_argument("ModelConfig: Omega must be >= 0");
        if (!(tau * m * m + 2.0 * m * E0 > 0.0))
            throw std::invalid_argument("ModelConfig: tau m^2 + 2 m E0 must be > 0");
    }
}

EPConfig ModelConfig::ep() const {
    EPConfig c;
    c.m = m; c.omega = omega; c.tau = tau; c.E0 = E0; c.hbar = hbar; c.amp = 0.0;
    return c;
}

double ModelConfig::stiffness() const { return m * tau + 2.0 * c_kappa; }

double ModelConfig::gk_a() const { return std::sqrt(tau * m * m + 2.0 * m * E0); }

double ModelConfig::gk_b() const {
    const double mo = m * Omega / hbar;
    return std::sqrt(1.0 + 4.0 * mo * mo);
}

std::optional<int> ModelConfig::gk_ell() const {
    const double b = gk_b();
    const double ell = 0.5 * (b - 1.0);
    const double rounded = std::round(ell);
    if (rounded >= 0.0 && std::abs(ell - rounded) < 1e-9) return int(rounded);
    return std::nullopt;
}

}  // namespace lrtrap
