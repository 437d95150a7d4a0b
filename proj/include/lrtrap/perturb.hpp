#pragma once

#include <vector>

#include "lrtrap/exact.hpp"
#include "lrtrap/models.hpp"

namespace lrtrap {

// First-order Rayleigh-Schroedinger data for the invariant split
// I = I0 + eps I_p with I_p = (m/sigma^2) x^2.
// Expansion parameter: eps = c_kappa (model A) or eps = E0 (model B).

struct FirstOrderEigenvalue {
    double lambda0;
    double lambda1;
    double total(double eps) const { return lambda0 + eps * lambda1; }
};

double perturbation_parameter(const ModelConfig& cfg);

// Copy of cfg with the expansion parameter switched off.
ModelConfig unperturbed_config(const ModelConfig& cfg);

FirstOrderEigenvalue lambda_first_order(const ModelConfig& cfg, int n);

// Nonzero admixture coefficients of |phi_k^(0)> in |phi_n^(1)>; four terms
// for model A (k = n+-1, n+-2), two for model B (k = n+-1).  Terms with
// negative k are dropped.
struct MixTerm {
    int k;
    double coeff;
};
std::vector<MixTerm> mixing_terms(const ModelConfig& cfg, int n);

double phase_first_order(const ModelConfig& cfg, int n, double t);

// |phi_n>^(1) = |phi_n^(0)> + eps |phi_n^(1)>, psi = e^{i alpha^(1)} phi;
// norm is 1 + O(eps^2) by construction (no renormalization applied).
Eigenstate eigen_perturbative(const ModelConfig& cfg, int n);

}  // namespace lrtrap
