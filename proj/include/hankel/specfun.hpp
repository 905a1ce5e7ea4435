#pragma once

#include <complex>
#include <vector>

namespace hankel {

using cxd = std::complex<double>;

inline constexpr double euler_gamma = 0.5772156649015328606065121;

/// log Gamma(z) for complex z (Lanczos approximation, reflection for
/// Re z < 1/2). Principal branch.
cxd log_gamma(cxd z);

double log_beta(double x, double y);
double beta(double x, double y);

/// Taylor coefficients a_0..a_order of gamma(z) = 1/Gamma(1-z) at z = 0,
/// obtained by exponentiating -log Gamma(1-z) = -euler_gamma z - sum zeta(k) z^k / k.
std::vector<double> recip_gamma_taylor(int order);

/// v(x) = sqrt(pi / cosh(pi x)), overflow-safe for large |x|.
double standard_weight(double x);

}  // namespace hankel
