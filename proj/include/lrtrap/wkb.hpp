#pragma once

#include <utility>

#include "lrtrap/exact.hpp"
#include "lrtrap/models.hpp"

namespace lrtrap {

// WKB treatment of the transformed invariant for the Stark + x^2 model.
// All xi-space quantities refer to Ihat = -hbar^2/2 d^2/dxi^2 + Vhat(xi);
// time dependence enters only through the map x = sigma xi and the chirp
// weight, exactly as for the exact solution.

struct WKBData {
    int n = 0;
    double lambda = 0.0;       // from the quantization condition
    double a = 0.0;            // compact constants of the eigenfunction argument
    double b = 0.0;            // xi-space slope (sigma = 1)
    double r = 0.0;            // half-width of the allowed region in z = a + b xi
    double xi_minus = 0.0;
    double xi_plus = 0.0;
    double c3 = 0.0;           // normalization constant
    double exclusion = 0.0;    // turning-point exclusion radius
};

std::pair<double, double> turning_points(const ModelConfig& cfg, double lambda);

// Solve int sqrt(2(lambda - Vhat)) dxi = pi hbar (n + 1/2) for lambda by
// bracketing + bisection with adaptive quadrature of the action integral.
double wkb_quantize(const ModelConfig& cfg, int n);

double wkb_action(const ModelConfig& cfg, double lambda);  // the integral above

WKBData wkb_data(const ModelConfig& cfg, int n);

bool wkb_masked(const WKBData& d, double xi);

// Region-matched wavefunction chi(xi); throws if xi is inside an exclusion
// zone (callers mask those points for output).
double wkb_wavefunction(const WKBData& d, double xi);

// x-space eigenstate; phi evaluators throw inside masked zones.
Eigenstate eigen_wkb(const ModelConfig& cfg, int n);

// alpha^WKB(t) = (1/hbar) int_0^t <phi|i hbar d_t - H|phi> dt', with the
// matrix element integrated over x excluding the turning-point zones and
// renormalized by the retained weight.
double wkb_phase(const ModelConfig& cfg, int n, double t);

// Closed-form comparison value -lambda_n/(m sqrt(tau) hbar) * arctan branch.
double wkb_phase_closed(const ModelConfig& cfg, int n, double t);

}  // namespace lrtrap
