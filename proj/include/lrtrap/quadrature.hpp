#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace lrtrap {

// Adaptive Gauss-Kronrod 7/15 on finite intervals.  The value type may be
// double or std::complex<double>; the error estimate is |K15 - G7|.

namespace gk {

// Kronrod 15 abscissae (positive half) and weights, Gauss 7 weights.
inline constexpr double xk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F, class T>
void kernel(F&& f, double a, double b, T& result, double& err, double& resabs) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * xk[i]);
        fv[14 - i] = f(c + h * xk[i]);
    }
    fv[7] = f(c);
    T resk = wk[7] * fv[7];
    T resg = wg[3] * fv[7];
    double rabs = wk[7] * std::abs(fv[7]);
    for (int i = 0; i < 7; ++i) {
        resk += wk[i] * (fv[i] + fv[14 - i]);
        rabs += wk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    }
    for (int i = 0; i < 3; ++i) resg += wg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    result = resk * h;
    err = std::abs((resk - resg) * h);
    resabs = rabs * std::abs(h);
}

// Bisect while the Kronrod error estimate exceeds the (length-split)
// tolerance; intervals whose estimate is at the roundoff floor of |f| are
// accepted as converged.
template <class F, class T>
void adapt(F&& f, double a, double b, double tol, int depth, T& acc, double& err_acc) {
    T val;
    double err, resabs;
    kernel(f, a, b, val, err, resabs);
    if (err <= tol || err <= 64.0 * 2.3e-16 * resabs || depth >= 26) {
        acc += val;
        err_acc += err;
        return;
    }
    const double c = 0.5 * (a + b);
    adapt(f, a, c, 0.5 * tol, depth + 1, acc, err_acc);
    adapt(f, c, b, 0.5 * tol, depth + 1, acc, err_acc);
}

}  // namespace gk

template <class F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-12, double rel_tol = 1e-12) {
    double coarse, err0, resabs0;
    gk::kernel(f, a, b, coarse, err0, resabs0);
    const double tol = std::max(abs_tol, rel_tol * std::abs(coarse));
    double acc = 0.0, err = 0.0;
    gk::adapt(f, a, b, tol, 0, acc, err);
    return acc;
}

template <class F>
std::complex<double> integrate_c(F&& f, double a, double b, double abs_tol = 1e-12,
                                 double rel_tol = 1e-12) {
    std::complex<double> coarse;
    double err0, resabs0;
    gk::kernel(f, a, b, coarse, err0, resabs0);
    const double tol = std::max(abs_tol, rel_tol * std::abs(coarse));
    std::complex<double> acc = 0.0;
    double err = 0.0;
    gk::adapt(f, a, b, tol, 0, acc, err);
    return acc;
}

}  // namespace lrtrap
