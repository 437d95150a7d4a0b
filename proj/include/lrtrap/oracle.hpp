#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "lrtrap/exact.hpp"
#include "lrtrap/models.hpp"

namespace lrtrap {

struct Grid {
    double x_min = 0.0;
    double x_max = 0.0;
    int n = 0;

    void validate() const;  // n >= 64, x_max > x_min
    double spacing() const { return (x_max - x_min) / (n - 1); }
    double point(int i) const { return x_min + i * spacing(); }
    static Grid symmetric(double half_width, int n);
};

// Default grids wide enough for states up to n_max over a full sigma period.
Grid default_grid(const ModelConfig& cfg, int n_max, int n_points);

struct WaveSample {
    Grid grid;
    std::vector<std::complex<double>> values;
    double time = 0.0;

    double norm() const;  // discrete L2 norm, sqrt(h sum |v|^2)
    void normalize();
};

std::complex<double> overlap(const WaveSample& a, const WaveSample& b);

// Time-dependent potential of the model Hamiltonian H(t) = p^2/2m + V(x,t).
double potential_xt(const ModelConfig& cfg, double x, double t);

struct EigenPair {
    double lambda;
    std::vector<double> vec;  // discretely normalized, h sum v^2 = 1
};

// Lowest k eigenpairs of the transformed invariant on the grid interior,
// 3-point Laplacian, Dirichlet ends.  Sturm-sequence bisection plus inverse
// iteration; eigenvalues ascending.
std::vector<EigenPair> diagonalize_invariant(const ModelConfig& cfg, const Grid& grid, int k);

struct RefinedEigen {
    double lambda;          // Richardson-extrapolated from n/2 and n points
    double error_estimate;  // |lambda_fine - lambda_coarse| / 3
    std::vector<double> vec;
    Grid grid;              // fine grid the vector lives on
};

std::vector<RefinedEigen> diagonalize_invariant_refined(const ModelConfig& cfg, const Grid& grid,
                                                        int k);

// One Crank-Nicolson step with H sampled at the midpoint time.  Unitary to
// roundoff; tridiagonal solve per step.
void crank_nicolson_step(const ModelConfig& cfg, WaveSample& state, double dt);

// Propagate to t_final, calling on_sample(state) every sample_every steps
// (0 disables sampling).
void propagate(const ModelConfig& cfg, WaveSample& state, double t_final, double dt,
               int sample_every = 0,
               const std::function<void(const WaveSample&)>& on_sample = {});

// || i hbar dpsi/dt - H psi || / || psi || with 4th-order time differences
// (h_t = 1e-4) and the 3-point grid Hamiltonian, evaluated on the interior.
double tdse_residual(const ModelConfig& cfg, const std::function<cx(double, double)>& psi,
                     double t, const Grid& grid);

}  // namespace lrtrap
