#include "lrtrap/ermakov.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lrtrap {

void EPConfig::validate() const {
    if (!(m > 0.0)) throw std::invalid_argument("EPConfig: m must be > 0");
    if (!(omega > 0.0)) throw std::invalid_argument("EPConfig: omega must be > 0");
    if (!(tau > 0.0)) throw std::invalid_argument("EPConfig: tau must be > 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("EPConfig: hbar must be > 0");
    if (amp < 0.0) throw std::invalid_argument("EPConfig: amp must be > 0 (or 0 for default)");
}

double EPConfig::amplitude() const {
    return amp > 0.0 ? amp : std::sqrt(tau) / omega;
}

EPSolution::EPSolution(EPConfig cfg) : cfg_(cfg) {
    cfg_.validate();
    const double a = cfg_.amplitude();
    a2_ = a * a;
    b2_ = cfg_.tau / (a2_ * cfg_.omega * cfg_.omega);
    sigma0_ = std::sqrt(b2_);
}

double EPSolution::sigma_sq(double t) const {
    const double s = std::sin(cfg_.omega * t);
    const double c = std::cos(cfg_.omega * t);
    return a2_ * s * s + b2_ * c * c;
}

double EPSolution::sigma(double t) const { return std::sqrt(sigma_sq(t)); }

double EPSolution::sigma_dot(double t) const {
    // d(sigma^2)/dt = w (A^2 - b2) sin(2wt)
    const double ds2 = cfg_.omega * (a2_ - b2_) * std::sin(2.0 * cfg_.omega * t);
    return 0.5 * ds2 / sigma(t);
}

double EPSolution::sigma_ddot(double t) const {
    const double s = sigma(t);
    const double ds2 = cfg_.omega * (a2_ - b2_) * std::sin(2.0 * cfg_.omega * t);
    const double d2s2 = 2.0 * cfg_.omega * cfg_.omega * (a2_ - b2_) * std::cos(2.0 * cfg_.omega * t);
    const double sd = 0.5 * ds2 / s;
    return (0.5 * d2s2 - sd * sd) / s;
}

double EPSolution::field(double t) const {
    const double r = sigma0_ / sigma(t);
    return cfg_.E0 * r * r * r;
}

double EPSolution::kappa_p(double p, double c_tilde, double t) const {
    return c_tilde * std::pow(sigma(t), -(2.0 + p));
}

double EPSolution::period() const { return std::numbers::pi / cfg_.omega; }

double ep_rk4_sigma(const EPConfig& cfg, double t, int steps_per_period) {
    cfg.validate();
    if (steps_per_period < 16) throw std::invalid_argument("ep_rk4_sigma: too few steps");
    const EPSolution sol(cfg);
    const double h0 = sol.period() / steps_per_period;
    const double w2 = cfg.omega * cfg.omega;
    const auto accel = [&](double s) { return cfg.tau / (s * s * s) - w2 * s; };

    double s = sol.sigma(0.0);
    double v = 0.0;
    double remaining = t;
    const double dir = (t >= 0.0) ? 1.0 : -1.0;
    while (dir * remaining > 0.0) {
        const double h = dir * std::min(std::abs(remaining), h0);
        const double k1s = v, k1v = accel(s);
        const double k2s = v + 0.5 * h * k1v, k2v = accel(s + 0.5 * h * k1s);
        const double k3s = v + 0.5 * h * k2v, k3v = accel(s + 0.5 * h * k2s);
        const double k4s = v + h * k3v, k4v = accel(s + h * k3s);
        s += h / 6.0 * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        remaining -= h;
    }
    return s;
}

}  // namespace lrtrap
