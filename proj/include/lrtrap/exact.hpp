#pragma once

#include <complex>
#include <functional>

#include "lrtrap/models.hpp"

namespace lrtrap {

using cx = std::complex<double>;

// One eigenstate of the invariant: phi is the (time-dependent) eigenfunction,
// psi = e^{i alpha(t)} phi the corresponding TDSE solution.  All evaluators
// are pure closures over immutable parameters and may be called concurrently.
struct Eigenstate {
    int n = 0;
    double lambda = 0.0;
    Method method = Method::exact;

    std::function<cx(double x, double t)> phi;
    std::function<cx(double x, double t)> dphi_dx;
    std::function<cx(double x, double t)> d2phi_dx2;
    std::function<cx(double x, double t)> dphi_dt;
    std::function<double(double t)> phase;       // alpha_n(t), alpha_n(0) = 0
    std::function<double(double t)> phase_rate;  // d alpha_n / dt

    cx psi(double x, double t) const;
    cx dpsi_dt(double x, double t) const;
};

// Continuous branch of arctan(sqrt(tau) tan(w t) / w); adds pi per half
// period so the result is the antiderivative of sqrt(tau)/sigma^2.
double unwrapped_arctan(double omega, double tau, double t);

// Phase factor exp(i m sigma_dot x^2 / (2 sigma hbar)) mapping eigenfunctions
// of the transformed invariant back to those of I(t).
cx unitary_map_weight(const ModelConfig& cfg, double t, double x);

double lambda_exact(const ModelConfig& cfg, int n);

Eigenstate eigen_a(const ModelConfig& cfg, int n);  // Stark + x^2 model
Eigenstate eigen_b(const ModelConfig& cfg, int n);  // Goldman-Krivchenko model
Eigenstate eigen_exact(const ModelConfig& cfg, int n);

// Lewis-Riesenfeld phase alpha_n(t) = -lambda_n/(m sqrt(tau) hbar) *
// unwrapped_arctan(...); d alpha/dt = -lambda_n/(m sigma^2 hbar).
double lr_phase(const ModelConfig& cfg, int n, double t);

cx psi_full(const ModelConfig& cfg, int n, double x, double t);

// Potential of the transformed (time-independent) invariant
// Ihat = -hbar^2/2 d^2/dxi^2 + Vhat(xi).
double transformed_potential(const ModelConfig& cfg, double xi);

}  // namespace lrtrap
