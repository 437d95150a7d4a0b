#pragma once

#include "lrtrap/exact.hpp"
#include "lrtrap/models.hpp"

namespace lrtrap {

struct ObservableSet {
    double t = 0.0;
    Method method = Method::exact;
    double mean_x = 0.0;
    double mean_p = 0.0;
    double mean_x2 = 0.0;
    double mean_p2 = 0.0;
    double dxdp = 0.0;
};

// Closed-form expectation values.  Model B requires b = 2l+1 (integer l).
ObservableSet expectations_exact(const ModelConfig& cfg, int n, double t);

// First-order closed forms; equal to the exact forms Taylor-expanded to
// first order in the expansion parameter.
ObservableSet expectations_perturbative(const ModelConfig& cfg, int n, double t);

// Direct quadrature with the state's analytic derivative (oracle route for
// the closed forms above; also usable with perturbative states).
ObservableSet expectations_quadrature(const ModelConfig& cfg, const Eigenstate& state, double t);

// A_n(t) = |<psi_n(t)|psi_n(0)>| with both states normalized, adaptive
// quadrature on the model's domain; domain doubled until the overlap
// changes by less than 1e-9.
double autocorrelation(const ModelConfig& cfg, int n, double t, Method method);

// Half-width (model A) or right edge (model B) covering the state's support
// at time t, with tail allowance.
double spatial_extent(const ModelConfig& cfg, int n, double t);

}  // namespace lrtrap
