#pragma once

#include <vector>

#include "lrtrap/models.hpp"

namespace lrtrap {

// One admissible potential term V_p = c_p x^p with temporal coefficient
// kappa_p(t) = c_tilde_p / sigma^(2+p).
struct PotentialTerm {
    double p;        // exponent
    double c_p;      // spatial coefficient
    double c_tilde;  // temporal integration constant
};

struct PotentialSeries {
    std::vector<PotentialTerm> terms;
};

// Coefficients of the invariant
//   I(t) = 1/2 [ alpha p^2 + sum_p beta_p V_p + gamma x + delta {x,p} + epsilon x^2 ]
// evaluated at one instant.  beta_terms pairs (p, beta_p) with
// beta_p = m sigma^2 kappa_p.
struct InvariantCoeffs {
    double t = 0.0;
    double alpha = 0.0;    // p^2
    double gamma = 0.0;    // x
    double delta = 0.0;    // {x,p}
    double epsilon = 0.0;  // x^2
    std::vector<std::pair<double, double>> beta_terms;

    // x^2 coefficient inside the bracket including any p = 2 series term.
    double epsilon_total() const;
};

InvariantCoeffs coeffs_at(const EPConfig& cfg, const PotentialSeries& series, double t);

// Termwise expansion of A(t)(e^{-lambda(t) x^2} - 1) with A = lambda = sigma^-2:
// V_{2n} = x^{2n}, kappa_n = (-1)^n / n! sigma^{-(2+2n)}, n = 1..N.
PotentialSeries expand_gaussian(int order);

// Termwise expansion of the soft Coulomb potential A(t)/sqrt(x^2 + k^2 a^2(t))
// with A = 1/a = sigma^-1:
// V_{2n} = x^{2n}, kappa_n = (-1)^n (2n)! / ((2n)!!)^2 sigma^{-(2+2n)} k^{-(1+2n)}.
PotentialSeries expand_soft_coulomb(int order, double k);

// Full coefficient set of the benchmark-model invariants.
//   A: beta-term (p=2, c~ = 2 c_kappa), Stark gamma = 2 m sigma^2 E(t).
//   B: beta-terms (p=2, c~ = 2 E0) and (p=-2, c~ = m Omega^2), gamma = 0.
InvariantCoeffs invariant_quadratic_form(const ModelConfig& model, double t);

}  // namespace lrtrap
