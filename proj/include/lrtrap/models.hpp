#pragma once

#include <optional>
#include <string>

#include "lrtrap/ermakov.hpp"

namespace lrtrap {

enum class ModelTag {
    stark_quadratic,     // H = p^2/2m + m w^2 x^2/2 + (c_kappa/sigma^4) x^2 + x E(t),  E = E0/sigma^3
    goldman_krivchenko,  // H = p^2/2m + m w^2 x^2/2 + m Omega^2/(2 x^2) + x^2 E(t),    E = E0/sigma^4
};

enum class Method { exact, perturbative, wkb, oracle };

std::string to_string(Method m);
std::optional<Method> method_from_string(const std::string& s);

struct ModelConfig {
    ModelTag tag = ModelTag::stark_quadratic;
    double m = 1.0;
    double omega = 1.0;
    double tau = 1.0;
    double E0 = 0.0;
    double hbar = 1.0;
    double c_kappa = 0.0;  // model A only
    double Omega = 0.0;    // model B only

    static ModelConfig stark(double m, double omega, double tau, double E0, double c_kappa,
                             double hbar = 1.0);
    static ModelConfig gk(double m, double omega, double tau, double E0, double Omega,
                          double hbar = 1.0);
    // b = 2l+1  <=>  m^2 Omega^2 = hbar^2 l(l+1)
    static ModelConfig gk_from_ell(double m, double omega, double tau, double E0, int ell,
                                   double hbar = 1.0);

    void validate() const;
    EPConfig ep() const;  // default amplitude, sigma(0) = 1

    // Model A: spring constant of the transformed invariant, k = m tau + 2 c_kappa.
    double stiffness() const;

    // Model B: width and barrier indices of the transformed invariant,
    // a = sqrt(tau m^2 + 2 m E0),  b = sqrt(1 + 4 m^2 Omega^2 / hbar^2).
    double gk_a() const;
    double gk_b() const;
    std::optional<int> gk_ell() const;  // integer l when b = 2l+1
};

}  // namespace lrtrap
