#pragma once

namespace lrtrap::specfun {

// Cap on recurrence length; keeps polynomial evaluation bounded.
inline constexpr int kMaxOrder = 200;

/// Physicists' Hermite polynomial H_n(z) by forward three-term recurrence.
double hermite_phys(int n, double z);

/// Parabolic cylinder function D_n(z) for integer n >= 0.
/// Evaluated through its own recurrence D_{k+1} = z D_k - k D_{k-1},
/// D_0 = exp(-z^2/4), which keeps the Gaussian damping inside the
/// iteration instead of multiplying a huge Hermite value at the end.
double parabolic_cylinder_d(int n, double z);

/// Generalized Laguerre polynomial L_n^alpha(z), alpha > -1.
double laguerre_assoc(int n, double alpha, double z);

/// log Gamma(x) for x > 0.
double ln_gamma(double x);

}  // namespace lrtrap::specfun
