#include "lrtrap/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lrtrap::specfun {

namespace {

void check_order(int n, const char* fn) {
    if (n < 0) throw std::invalid_argument(std::string(fn) + ": order must be non-negative");
    if (n > kMaxOrder)
        throw std::invalid_argument(std::string(fn) + ": order " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(kMaxOrder));
}

}  // namespace

double hermite_phys(int n, double z) {
    check_order(n, "hermite_phys");
    if (n == 0) return 1.0;
    double hm = 1.0;        // H_0
    double h = 2.0 * z;     // H_1
    for (int k = 1; k < n; ++k) {
        const double hp = 2.0 * z * h - 2.0 * k * hm;
        hm = h;
        h = hp;
    }
    return h;
}

double parabolic_cylinder_d(int n, double z) {
    check_order(n, "parabolic_cylinder_d");
    const double d0 = std::exp(-0.25 * z * z);
    if (n == 0) return d0;
    double dm = d0;
    double d = z * d0;      // D_1
    for (int k = 1; k < n; ++k) {
        const double dp = z * d - k * dm;
        dm = d;
        d = dp;
    }
    return d;
}

double laguerre_assoc(int n, double alpha, double z) {
    check_order(n, "laguerre_assoc");
    if (alpha <= -1.0) throw std::invalid_argument("laguerre_assoc: alpha must be > -1");
    if (n == 0) return 1.0;
    double lm = 1.0;              // L_0
    double l = 1.0 + alpha - z;   // L_1
    for (int k = 1; k < n; ++k) {
        const double lp = ((2.0 * k + 1.0 + alpha - z) * l - (k + alpha) * lm) / (k + 1.0);
        lm = l;
        l = lp;
    }
    return l;
}

double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("ln_gamma: requires x > 0");
    return std::lgamma(x);
}

}  // namespace lrtrap::specfun
