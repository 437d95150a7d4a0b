#include "lrtrap/invariant.hpp"

#include <cmath>
#include <stdexcept>

namespace lrtrap {

double InvariantCoeffs::epsilon_total() const {
    double e = epsilon;
    for (const auto& [p, beta] : beta_terms)
        if (p == 2.0) e += beta;
    return e;
}

InvariantCoeffs coeffs_at(const EPConfig& cfg, const PotentialSeries& series, double t) {
    const EPSolution sol(cfg);
    const double s = sol.sigma(t);
    const double sd = sol.sigma_dot(t);
    const double m = cfg.m;

    InvariantCoeffs c;
    c.t = t;
    c.alpha = s * s;
    c.gamma = 2.0 * m * s * s * sol.field(t);
    c.delta = -m * s * sd;
    c.epsilon = m * m * sd * sd + m * m * cfg.tau / (s * s);
    c.beta_terms.reserve(series.terms.size());
    for (const auto& term : series.terms)
        c.beta_terms.emplace_back(term.p, m * s * s * sol.kappa_p(term.p, term.c_tilde, t));
    return c;
}

PotentialSeries expand_gaussian(int order) {
    if (order < 1) throw std::invalid_argument("expand_gaussian: order must be >= 1");
    PotentialSeries series;
    series.terms.reserve(order);
    double inv_fact = 1.0;
    for (int n = 1; n <= order; ++n) {
        inv_fact /= n;
        series.terms.push_back({2.0 * n, 1.0, (n % 2 ? -1.0 : 1.0) * inv_fact});
    }
    return series;
}

PotentialSeries expand_soft_coulomb(int order, double k) {
    if (order < 1) throw std::invalid_argument("expand_soft_coulomb: order must be >= 1");
    if (!(k > 0.0)) throw std::invalid_argument("expand_soft_coulomb: k must be > 0");
    PotentialSeries series;
    series.terms.reserve(order);
    // (2n)!/((2n)!!)^2 = (2n-1)!!/(2n)!! built up iteratively
    double ratio = 1.0;
    double kpow = 1.0 / k;
    for (int n = 1; n <= order; ++n) {
        ratio *= (2.0 * n - 1.0) / (2.0 * n);
        kpow /= k * k;
        series.terms.push_back({2.0 * n, 1.0, (n % 2 ? -1.0 : 1.0) * ratio * kpow});
    }
    return series;
}

InvariantCoeffs invariant_quadratic_form(const ModelConfig& model, double t) {
    model.validate();
    PotentialSeries series;
    if (model.tag == ModelTag::stark_quadratic) {
        series.terms.push_back({2.0, 1.0, 2.0 * model.c_kappa});
    } else {
        series.terms.push_back({2.0, 1.0, 2.0 * model.E0});
        series.terms.push_back({-2.0, 1.0, model.m * model.Omega * model.Omega});
    }
    InvariantCoeffs c = coeffs_at(model.ep(), series, t);
    if (model.tag == ModelTag::goldman_krivchenko) c.gamma = 0.0;  // no Stark term
    return c;
}

}  // namespace lrtrap
