#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hankel/quadrature.hpp"

namespace hankel {

using cxd = std::complex<double>;

/// tau(alpha) = 2^{-alpha} pi^{1-2 alpha} B(1/(2 alpha), 1/2)^{alpha}.
double tau(double alpha);

struct AsymptoticLaw {
    enum class Family { power, jump, widom };
    Family family = Family::power;
    double exponent = 1.0;  // alpha, or l+1 for the jump law
    double a_plus = 0.0;
    double a_minus = 0.0;
    std::string provenance;
};

/// Eigenvalue law for kernels with log-power behaviour at both endpoints:
/// a_pm = tau(alpha) ((kappa_0)_pm^{1/alpha} + (kappa_inf)_pm^{1/alpha})^alpha.
AsymptoticLaw law_thm_d1(double alpha, double kappa0, double kappa_inf);

/// Discrete (Hankel-matrix) eigenvalue law:
/// b_pm = tau(alpha) ((kappa_1)_pm^{1/alpha} + (kappa_-1)_pm^{1/alpha})^alpha.
AsymptoticLaw law_cr_a3(double alpha, double kappa1, double kappa_m1);

/// Oscillatory singular-value law (localization over the points zeta_l):
/// b = tau(alpha) (sum |kappa_l|^{1/alpha})^alpha, both branches equal.
AsymptoticLaw law_thm_a4(double alpha, std::span<const cxd> kappas);

/// Discrete eigenvalue law with oscillatory terms away from +-1.
AsymptoticLaw law_thm_a5(double alpha, double x1, double xm1, std::span<const cxd> kappas);

/// Continuous eigenvalue law with oscillatory terms.
AsymptoticLaw law_thm_a7(double alpha, double kappa0, double kappa_inf,
                         std::span<const cxd> kappas);

/// Weyl coefficients of v(X) s(D) v(X):
/// a_pm = (2 pi)^{-alpha} ((s_-inf)_pm^{1/alpha} + (s_inf)_pm^{1/alpha})^alpha
///        (int |v|^{2/alpha} dx)^alpha.
/// Checks the decay hypothesis |v| <= C <x>^{-rho}, rho > alpha/2, on a sample
/// grid and the integral tail; throws std::runtime_error on divergence.
std::pair<double, double> weyl_coeff(double alpha, double s_inf, double s_minus_inf,
                                     const std::function<double(double)>& v,
                                     const QuadratureConfig& q = {});

/// lambda_n^pm = |h0| l! (2 pi)^{-l-1} t0^{l+1} n^{-l-1} (1 + O(1/n)).
AsymptoticLaw jump_law(double h0, int l, double t0);

/// Widom exponent: -log lambda_n ~ pi sqrt(2 gamma n).
double widom_exponent(double gamma, double n);

/// lim n^alpha dist_BMO = |1-alpha| tau(alpha) (sum |v_l(zeta_l)|^{1/alpha})^alpha.
double rational_approx_limit(double alpha, std::span<const double> boundary_values);

/// N(alpha) = [alpha] + 1 for alpha >= 1/2, else 0.
int smoothness_order(double alpha);

struct FitWindow {
    double lo_frac = 0.15;
    double hi_frac = 0.6;
    std::size_t n_lo = 0;  // when nonzero, absolute 1-based window overrides the fractions
    std::size_t n_hi = 0;
};

struct FitReport {
    double alpha_hat = 0.0;
    double c_hat = 0.0;
    std::size_t n_lo = 0;
    std::size_t n_hi = 0;          // inclusive, 1-based
    double rel_deviation = 0.0;    // max |n^a lam_n / c_pred - 1| over the window
    double drift_slope = 0.0;      // slope of n^{alpha_pred} lam_n vs 1/log n
    double extrapolated_coeff = 0.0;  // intercept of that line at 1/log n -> 0
    double curvature = 0.0;        // quadratic coefficient of log lam vs log n
    std::string suggested_family;  // "power" or "widom"
};

/// Least squares in log-log over the window, drift diagnostic in 1/log n
/// against the predicted exponent/coefficient. values[i] is lambda_{i+1};
/// throws std::invalid_argument when fewer than 10 positive values fall in
/// the window.
FitReport fit_power_law(std::span<const double> values, const FitWindow& window,
                        double alpha_pred, double coeff_pred);

}  // namespace hankel
