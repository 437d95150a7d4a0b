#include "lrtrap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lrtrap {

namespace {

double max_sigma(const ModelConfig& cfg) {
    return std::max(1.0, std::sqrt(cfg.tau) / cfg.omega);
}

// Spatial extent of the transformed-invariant eigenstates up to n_max:
// outermost classical turning point plus a tail allowance.
double xi_extent(const ModelConfig& cfg, int n_max) {
    const double lam = lambda_exact(cfg, n_max);
    if (cfg.tag == ModelTag::stark_quadratic) {
        const double k = cfg.stiffness();
        const double bhat = std::numbers::sqrt2 * std::pow(cfg.m * k, 0.25) / std::sqrt(cfg.hbar);
        const double disc = std::sqrt(cfg.m * cfg.E0 * cfg.E0 + 2.0 * lam * k) / std::sqrt(cfg.m);
        const double turn = (std::abs(cfg.E0) + disc) / k;
        return turn + 8.0 / bhat;
    }
    const double a = cfg.gk_a();
    const double turn = std::sqrt(2.0 * lam) / a;  // from 1/2 a^2 xi^2 = lambda
    return turn + 8.0 * std::sqrt(cfg.hbar / a);
}

std::vector<double> tridiag_diagonal(const ModelConfig& cfg, const Grid& g) {
    const double h = g.spacing();
    const double kin = cfg.hbar * cfg.hbar / (h * h);
    std::vector<double> d(g.n);
    for (int i = 0; i < g.n; ++i) d[i] = kin + transformed_potential(cfg, g.point(i));
    return d;
}

// Number of eigenvalues of tridiag(d; e) strictly below x.
int sturm_count(const std::vector<double>& d, double off_sq, double x, double pivmin) {
    int count = 0;
    double q = d[0] - x;
    if (q < 0.0) ++count;
    const int m = int(d.size());
    for (int i = 1; i < m; ++i) {
        double denom = q;
        if (std::abs(denom) < pivmin) denom = (denom < 0.0 ? -pivmin : pivmin);
        q = d[i] - x - off_sq / denom;
        if (q < 0.0) ++count;
    }
    return count;
}

// LU factors of (T - lam I) with partial pivoting (gttrf-style layout).
struct TriLU {
    std::vector<double> dl;   // multipliers
    std::vector<double> dd;   // U diagonal
    std::vector<double> du;   // U superdiagonal
    std::vector<double> du2;  // U second superdiagonal (pivot fill-in)
    std::vector<char> swp;    // row swap at elimination step i
};

TriLU tri_factor(const std::vector<double>& diag, double e, double lam, double tiny) {
    const int n = int(diag.size());
    TriLU f;
    f.dd.resize(n);
    f.dl.assign(std::max(n - 1, 0), e);
    f.du.assign(std::max(n - 1, 0), e);
    f.du2.assign(std::max(n - 2, 0), 0.0);
    f.swp.assign(std::max(n - 1, 0), 0);
    for (int i = 0; i < n; ++i) f.dd[i] = diag[i] - lam;
    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(f.dd[i]) >= std::abs(f.dl[i])) {
            if (f.dd[i] == 0.0) f.dd[i] = tiny;
            const double fact = f.dl[i] / f.dd[i];
            f.dl[i] = fact;
            f.dd[i + 1] -= fact * f.du[i];
        } else {
            const double fact = f.dd[i] / f.dl[i];
            f.dd[i] = f.dl[i];
            f.dl[i] = fact;
            const double temp = f.du[i];
            f.du[i] = f.dd[i + 1];
            f.dd[i + 1] = temp - fact * f.dd[i + 1];
            if (i + 2 < n) {
                f.du2[i] = f.du[i + 1];
                f.du[i + 1] = -fact * f.du[i + 1];
            }
            f.swp[i] = 1;
        }
    }
    if (f.dd[n - 1] == 0.0) f.dd[n - 1] = tiny;
    return f;
}

void tri_solve(const TriLU& f, std::vector<double>& b) {
    const int n = int(f.dd.size());
    for (int i = 0; i + 1 < n; ++i) {
        if (!f.swp[i]) {
            b[i + 1] -= f.dl[i] * b[i];
        } else {
            const double temp = b[i];
            b[i] = b[i + 1];
            b[i + 1] = temp - f.dl[i] * b[i];
        }
    }
    b[n - 1] /= f.dd[n - 1];
    if (n >= 2) b[n - 2] = (b[n - 2] - f.du[n - 2] * b[n - 1]) / f.dd[n - 2];
    for (int i = n - 3; i >= 0; --i)
        b[i] = (b[i] - f.du[i] * b[i + 1] - f.du2[i] * b[i + 2]) / f.dd[i];
}

// Eigenvector by inverse iteration; overall sign is arbitrary.
std::vector<double> inverse_iteration(const std::vector<double>& diag, double e, double lam,
                                      double scale, double h) {
    const int n = int(diag.size());
    const TriLU f = tri_factor(diag, e, lam, scale * 1e-15);
    std::vector<double> v(n, 1.0);
    for (int pass = 0; pass < 3; ++pass) {
        tri_solve(f, v);
        double nrm = 0.0;
        for (double x : v) nrm += x * x;
        nrm = std::sqrt(nrm * h);
        for (double& x : v) x /= nrm;
    }
    return v;
}

}  // namespace

void Grid::validate() const {
    if (n < 64) throw std::invalid_argument("Grid: need at least 64 points");
    if (!(x_max > x_min)) throw std::invalid_argument("Grid: x_max must exceed x_min");
}

Grid Grid::symmetric(double half_width, int n) { return Grid{-half_width, half_width, n}; }

Grid default_grid(const ModelConfig& cfg, int n_max, int n_points) {
    const double ext = xi_extent(cfg, n_max) * max_sigma(cfg);
    if (cfg.tag == ModelTag::stark_quadratic) return Grid::symmetric(ext, n_points);
    const double h = ext / n_points;
    return Grid{h, ext, n_points};
}

double WaveSample::norm() const {
    double s = 0.0;
    for (const auto& v : values) s += std::norm(v);
    return std::sqrt(s * grid.spacing());
}

void WaveSample::normalize() {
    const double nrm = norm();
    if (nrm == 0.0) throw std::runtime_error("WaveSample: zero norm");
    for (auto& v : values) v /= nrm;
}

std::complex<double> overlap(const WaveSample& a, const WaveSample& b) {
    if (a.values.size() != b.values.size()) throw std::invalid_argument("overlap: size mismatch");
    std::complex<double> s = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i) s += std::conj(a.values[i]) * b.values[i];
    return s * a.grid.spacing();
}

double potential_xt(const ModelConfig& cfg, double x, double t) {
    const EPSolution sol(cfg.ep());
    const double s = sol.sigma(t);
    const double harm = 0.5 * cfg.m * cfg.omega * cfg.omega * x * x;
    const double s2 = s * s;
    if (cfg.tag == ModelTag::stark_quadratic)
        return harm + cfg.c_kappa / (s2 * s2) * x * x + x * cfg.E0 / (s2 * s);
    return harm + 0.5 * cfg.m * cfg.Omega * cfg.Omega / (x * x) + cfg.E0 / (s2 * s2) * x * x;
}

std::vector<EigenPair> diagonalize_invariant(const ModelConfig& cfg, const Grid& grid, int k) {
    cfg.validate();
    grid.validate();
    if (k < 1 || k > 20) throw std::invalid_argument("diagonalize_invariant: need 1 <= k <= 20");
    if (cfg.tag == ModelTag::goldman_krivchenko && !(grid.x_min > 0.0))
        throw std::invalid_argument("diagonalize_invariant: model B grid needs x_min > 0");

    const double h = grid.spacing();
    const double e = -cfg.hbar * cfg.hbar / (2.0 * h * h);
    const std::vector<double> d = tridiag_diagonal(cfg, grid);

    // Gershgorin bounds
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < grid.n; ++i) {
        const double r = (i > 0 ? std::abs(e) : 0.0) + (i + 1 < grid.n ? std::abs(e) : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    const double scale = std::max(std::abs(lo), std::abs(hi));
    const double pivmin = scale * 1e-292;
    const double off_sq = e * e;

    std::vector<EigenPair> out;
    out.reserve(k);
    for (int j = 0; j < k; ++j) {
        double a = lo, b = hi;
        while (b - a > 1e-14 * scale + 1e-15 * (std::abs(a) + std::abs(b))) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(d, off_sq, mid, pivmin) > j)
                b = mid;
            else
                a = mid;
        }
        const double lam = 0.5 * (a + b);
        out.push_back({lam, inverse_iteration(d, e, lam, scale, h)});
    }
    return out;
}

std::vector<RefinedEigen> diagonalize_invariant_refined(const ModelConfig& cfg, const Grid& grid,
                                                        int k) {
    Grid coarse = grid;
    coarse.n = grid.n / 2;
    if (cfg.tag == ModelTag::goldman_krivchenko) {
        // Both levels must keep the virtual Dirichlet node exactly at the
        // origin, otherwise the wall moves between refinements and the h^2
        // extrapolation is invalid.
        if (std::abs(grid.x_min - grid.spacing()) > 1e-12 * grid.x_max)
            throw std::invalid_argument(
                "diagonalize_invariant_refined: model B grid must start at x_min = spacing");
        coarse.x_min = coarse.x_max / coarse.n;
    }
    const auto fine_pairs = diagonalize_invariant(cfg, grid, k);
    const auto coarse_pairs = diagonalize_invariant(cfg, coarse, k);
    std::vector<RefinedEigen> out;
    out.reserve(k);
    for (int j = 0; j < k; ++j) {
        const double lf = fine_pairs[j].lambda;
        const double lc = coarse_pairs[j].lambda;
        RefinedEigen r;
        r.lambda = lf + (lf - lc) / 3.0;  // h^2 Richardson
        r.error_estimate = std::abs(lf - lc) / 3.0;
        r.vec = fine_pairs[j].vec;
        r.grid = grid;
        out.push_back(std::move(r));
    }
    return out;
}

void crank_nicolson_step(const ModelConfig& cfg, WaveSample& state, double dt) {
    const Grid& g = state.grid;
    const int n = g.n;
    const double h = g.spacing();
    const double kin = cfg.hbar * cfg.hbar / (2.0 * cfg.m * h * h);
    const double t_mid = state.time + 0.5 * dt;
    const std::complex<double> mu(0.0, 0.5 * dt / cfg.hbar);

    // (1 + mu H) psi_new = (1 - mu H) psi_old, H tridiagonal with Dirichlet
    // boundaries one spacing outside the grid.
    static thread_local std::vector<std::complex<double>> rhs, diag, cprime;
    rhs.resize(n);
    diag.resize(n);
    cprime.resize(n);

    const std::complex<double> off = mu * (-kin);
    for (int i = 0; i < n; ++i) {
        const double hd = 2.0 * kin + potential_xt(cfg, g.point(i), t_mid);
        diag[i] = 1.0 + mu * hd;
        const std::complex<double> left = (i > 0) ? state.values[i - 1] : 0.0;
        const std::complex<double> right = (i + 1 < n) ? state.values[i + 1] : 0.0;
        rhs[i] = (1.0 - mu * hd) * state.values[i] + mu * kin * (left + right);
    }

    // Thomas sweep (CN matrices are well conditioned, no pivoting needed)
    cprime[0] = off / diag[0];
    rhs[0] /= diag[0];
    for (int i = 1; i < n; ++i) {
        const std::complex<double> denom = diag[i] - off * cprime[i - 1];
        cprime[i] = off / denom;
        rhs[i] = (rhs[i] - off * rhs[i - 1]) / denom;
    }
    for (int i = n - 2; i >= 0; --i) rhs[i] -= cprime[i] * rhs[i + 1];

    state.values.assign(rhs.begin(), rhs.end());
    state.time += dt;
}

void propagate(const ModelConfig& cfg, WaveSample& state, double t_final, double dt,
               int sample_every, const std::function<void(const WaveSample&)>& on_sample) {
    if (!(dt > 0.0)) throw std::invalid_argument("propagate: dt must be > 0");
    long step = 0;
    const double eps = 1e-12 * std::max(1.0, std::abs(t_final));
    while (t_final - state.time > eps) {
        const double step_dt = std::min(dt, t_final - state.time);
        crank_nicolson_step(cfg, state, step_dt);
        ++step;
        if (sample_every > 0 && on_sample && step % sample_every == 0) on_sample(state);
    }
}

double tdse_residual(const ModelConfig& cfg, const std::function<cx(double, double)>& psi,
                     double t, const Grid& grid) {
    grid.validate();
    const int n = grid.n;
    const double h = grid.spacing();
    const double ht = 1e-4;
    const double kin = cfg.hbar * cfg.hbar / (2.0 * cfg.m * h * h);

    std::vector<cx> p0(n), pp(n), pm(n), pp2(n), pm2(n);
    for (int i = 0; i < n; ++i) {
        const double x = grid.point(i);
        p0[i] = psi(x, t);
        pp[i] = psi(x, t + ht);
        pm[i] = psi(x, t - ht);
        pp2[i] = psi(x, t + 2.0 * ht);
        pm2[i] = psi(x, t - 2.0 * ht);
    }

    double num = 0.0, den = 0.0;
    for (int i = 1; i + 1 < n; ++i) {
        const double x = grid.point(i);
        const cx dpsi_dt = (-pp2[i] + 8.0 * pp[i] - 8.0 * pm[i] + pm2[i]) / (12.0 * ht);
        const cx hpsi = -kin * (p0[i + 1] - 2.0 * p0[i] + p0[i - 1]) + potential_xt(cfg, x, t) * p0[i];
        num += std::norm(cx(0.0, cfg.hbar) * dpsi_dt - hpsi);
        den += std::norm(p0[i]);
    }
    if (den == 0.0) throw std::runtime_error("tdse_residual: zero wavefunction on grid");
    return std::sqrt(num / den);
}

}  // namespace lrtrap
