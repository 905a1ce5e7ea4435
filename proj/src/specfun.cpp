#include "hankel/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hankel {

namespace {

// Lanczos g = 7, n = 9 coefficient set.
constexpr double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

cxd log_gamma_core(cxd z)
{
    // valid for Re z >= 1/2
    z -= 1.0;
    cxd x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const cxd t = z + 7.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cxd log_gamma(cxd z)
{
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        const cxd pi = cxd(std::numbers::pi, 0.0);
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma_core(1.0 - z);
    }
    return log_gamma_core(z);
}

double log_beta(double x, double y)
{
    return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

double beta(double x, double y) { return std::exp(log_beta(x, y)); }

std::vector<double> recip_gamma_taylor(int order)
{
    if (order < 0) throw std::invalid_argument("recip_gamma_taylor: order < 0");
    // c(z) = -log Gamma(1-z): c_1 = -euler_gamma, c_k = -zeta(k)/k for k >= 2
    std::vector<double> c(order + 1, 0.0);
    if (order >= 1) c[1] = -euler_gamma;
    for (int k = 2; k <= order; ++k) c[k] = -std::riemann_zeta(static_cast<double>(k)) / k;
    // exp of a power series: a_0 = 1, n a_n = sum_{k=1}^{n} k c_k a_{n-k}
    std::vector<double> a(order + 1, 0.0);
    a[0] = 1.0;
    for (int n = 1; n <= order; ++n) {
        double s = 0.0;
        for (int k = 1; k <= n; ++k) s += k * c[k] * a[n - k];
        a[n] = s / n;
    }
    return a;
}

double standard_weight(double x)
{
    const double px = std::numbers::pi * std::abs(x);
    if (px > 36.0) {
        // cosh(px) ~ e^{px}/2; v = sqrt(2 pi) e^{-px/2}
        return std::sqrt(2.0 * std::numbers::pi) * std::exp(-0.5 * px);
    }
    return std::sqrt(std::numbers::pi / std::cosh(px));
}

}  // namespace hankel
