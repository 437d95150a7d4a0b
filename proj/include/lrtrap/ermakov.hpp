#pragma once

namespace lrtrap {

// Parameters of the driven trap in hbar-scaled dimensionless units.
// amp is the amplitude A of the oscillator solution u1 = A sin(wt) entering
// the Pinney composition; amp <= 0 selects the default sqrt(tau)/omega,
// which normalizes sigma(0) = 1 and hence E(0) = E0.
struct EPConfig {
    double m = 1.0;
    double omega = 1.0;
    double tau = 1.0;
    double E0 = 0.0;
    double hbar = 1.0;
    double amp = 0.0;

    void validate() const;
    double amplitude() const;  // effective A
};

// Closed-form solution of the auxiliary equation
//     sigma'' + omega^2 sigma = tau / sigma^3
// built from u1 = A sin(wt), u2 = B cos(wt):
//     sigma^2(t) = A^2 sin^2(wt) + (tau / (A^2 w^2)) cos^2(wt).
// The driving field is slaved to it, E(t) = c / sigma^3 with c fixed so
// that E(0) = E0.  All evaluators are pure; the object is immutable.
class EPSolution {
public:
    explicit EPSolution(EPConfig cfg);

    double sigma(double t) const;
    double sigma_sq(double t) const;
    double sigma_dot(double t) const;
    double sigma_ddot(double t) const;   // analytic trig form, not the EP identity
    double field(double t) const;        // E(t) = E0 sigma(0)^3 / sigma(t)^3
    double kappa_p(double p, double c_tilde, double t) const;  // c~ / sigma^(2+p)
    double period() const;               // pi / omega (period of sigma and E)

    const EPConfig& config() const { return cfg_; }

private:
    EPConfig cfg_;
    double a2_;      // A^2
    double b2_;      // tau / (A^2 w^2), the cos^2 coefficient of sigma^2
    double sigma0_;  // sigma(0)
};

// RK4 integration of the EP equation from (sigma(0), 0).  Cross-check
// oracle only; the production path is the closed form above.
double ep_rk4_sigma(const EPConfig& cfg, double t, int steps_per_period = 10000);

}  // namespace lrtrap
