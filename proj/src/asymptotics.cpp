#include "hankel/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hankel/specfun.hpp"

namespace hankel {

namespace {

double pos_part(double x) { return x > 0.0 ? x : 0.0; }
double neg_part(double x) { return x < 0.0 ? -x : 0.0; }

double branch_sum(double alpha, std::initializer_list<double> parts, double osc)
{
    double s = osc;
    for (double p : parts) s += std::pow(p, 1.0 / alpha);
    return s == 0.0 ? 0.0 : std::pow(s, alpha);
}

double osc_sum(double alpha, std::span<const cxd> kappas)
{
    double s = 0.0;
    for (const auto& k : kappas) s += std::pow(std::abs(k), 1.0 / alpha);
    return s;
}

}  // namespace

double tau(double alpha)
{
    if (!(alpha > 0.0)) throw std::invalid_argument("tau: alpha must be > 0");
    const double b = log_beta(0.5 / alpha, 0.5);
    return std::pow(2.0, -alpha) * std::pow(std::numbers::pi, 1.0 - 2.0 * alpha) *
           std::exp(alpha * b);
}

AsymptoticLaw law_thm_d1(double alpha, double kappa0, double kappa_inf)
{
    if (!(alpha > 0.0)) throw std::invalid_argument("law_thm_d1: alpha must be > 0");
    const double t = tau(alpha);
    return {AsymptoticLaw::Family::power, alpha,
            t * branch_sum(alpha, {pos_part(kappa0), pos_part(kappa_inf)}, 0.0),
            t * branch_sum(alpha, {neg_part(kappa0), neg_part(kappa_inf)}, 0.0),
            "kernel log-power eigenvalue law"};
}

AsymptoticLaw law_cr_a3(double alpha, double kappa1, double kappa_m1)
{
    auto law = law_thm_d1(alpha, kappa1, kappa_m1);
    law.provenance = "discrete log-power eigenvalue law";
    return law;
}

AsymptoticLaw law_thm_a4(double alpha, std::span<const cxd> kappas)
{
    if (!(alpha > 0.0)) throw std::invalid_argument("law_thm_a4: alpha must be > 0");
    const double s = osc_sum(alpha, kappas);
    const double b = s == 0.0 ? 0.0 : tau(alpha) * std::pow(s, alpha);
    return {AsymptoticLaw::Family::power, alpha, b, b, "oscillatory singular-value law"};
}

AsymptoticLaw law_thm_a5(double alpha, double x1, double xm1, std::span<const cxd> kappas)
{
    if (!(alpha > 0.0)) throw std::invalid_argument("law_thm_a5: alpha must be > 0");
    const double t = tau(alpha);
    const double osc = osc_sum(alpha, kappas);
    return {AsymptoticLaw::Family::power, alpha,
            t * branch_sum(alpha, {pos_part(xm1), pos_part(x1)}, osc),
            t * branch_sum(alpha, {neg_part(xm1), neg_part(x1)}, osc),
            "discrete eigenvalue law with oscillatory terms"};
}

AsymptoticLaw law_thm_a7(double alpha, double kappa0, double kappa_inf,
                         std::span<const cxd> kappas)
{
    auto law = law_thm_a5(alpha, kappa_inf, kappa0, kappas);
    law.provenance = "kernel eigenvalue law with oscillatory terms";
    return law;
}

std::pair<double, double> weyl_coeff(double alpha, double s_inf, double s_minus_inf,
                                     const std::function<double(double)>& v,
                                     const QuadratureConfig& q)
{
    if (!(alpha > 0.0)) throw std::invalid_argument("weyl_coeff: alpha must be > 0");
    // decay hypothesis |v(x)| <= C <x>^{-rho} with rho > alpha/2
    const double rho_min = 0.5 * alpha;
    for (double x : {32.0, 64.0, 128.0}) {
        const double lo = std::abs(v(x)) + std::abs(v(-x));
        const double hi = std::abs(v(2.0 * x)) + std::abs(v(-2.0 * x));
        if (lo == 0.0) continue;
        if (hi == 0.0) continue;
        const double rho_est = -std::log(hi / lo) / std::log(2.0);
        if (rho_est <= rho_min)
            throw std::runtime_error("weyl_coeff: weight decays too slowly for this alpha");
    }

    const double p = 2.0 / alpha;
    auto f = [&](double x) { return std::pow(std::abs(v(x)), p); };
    double integral = 0.0;
    double edge = 1.0;
    double tail = 0.0;
    const int per = q.nodes_per_panel;
    integral = integrate(composite_gl(-1.0, 1.0, 8, per), f);
    for (int k = 0; k < 64; ++k) {
        tail = integrate(composite_gl(edge, 2.0 * edge, 8, per), f) +
               integrate(composite_gl(-2.0 * edge, -edge, 8, per), f);
        integral += tail;
        edge *= 2.0;
        if (tail <= 1e-14 * std::abs(integral)) break;
    }
    if (tail > 1e-10 * std::abs(integral))
        throw std::runtime_error("weyl_coeff: weight integral did not converge");

    const double front = std::pow(2.0 * std::numbers::pi, -alpha);
    const double ia = std::pow(integral, alpha);
    const double plus = branch_sum(alpha, {pos_part(s_minus_inf), pos_part(s_inf)}, 0.0);
    const double minus = branch_sum(alpha, {neg_part(s_minus_inf), neg_part(s_inf)}, 0.0);
    return {front * plus * ia, front * minus * ia};
}

AsymptoticLaw jump_law(double h0, int l, double t0)
{
    if (l < 0 || !(t0 > 0.0)) throw std::invalid_argument("jump_law: need l >= 0, t0 > 0");
    double fact = 1.0;
    for (int i = 2; i <= l; ++i) fact *= i;
    const double c = std::abs(h0) * fact * std::pow(2.0 * std::numbers::pi, -l - 1.0) *
                     std::pow(t0, l + 1.0);
    return {AsymptoticLaw::Family::jump, static_cast<double>(l + 1), c, c, "jump kernel law"};
}

double widom_exponent(double gamma, double n)
{
    if (!(gamma > 1.0)) throw std::invalid_argument("widom_exponent: gamma must be > 1");
    return std::numbers::pi * std::sqrt(2.0 * gamma * n);
}

double rational_approx_limit(double alpha, std::span<const double> boundary_values)
{
    if (!(alpha > 0.0)) throw std::invalid_argument("rational_approx_limit: alpha must be > 0");
    double s = 0.0;
    for (double v : boundary_values) s += std::pow(std::abs(v), 1.0 / alpha);
    if (s == 0.0) return 0.0;
    return std::abs(1.0 - alpha) * tau(alpha) * std::pow(s, alpha);
}

int smoothness_order(double alpha)
{
    if (!(alpha > 0.0)) throw std::invalid_argument("smoothness_order: alpha must be > 0");
    if (alpha < 0.5) return 0;
    return static_cast<int>(std::floor(alpha)) + 1;
}

FitReport fit_power_law(std::span<const double> values, const FitWindow& window,
                        double alpha_pred, double coeff_pred)
{
    const std::size_t n = values.size();
    std::size_t lo, hi;
    if (window.n_lo > 0) {
        lo = window.n_lo;
        hi = std::min(window.n_hi + 1, n + 1);
    } else {
        lo = std::max<std::size_t>(static_cast<std::size_t>(window.lo_frac * static_cast<double>(n)), 1);
        hi = std::min(static_cast<std::size_t>(window.hi_frac * static_cast<double>(n)), n);
    }
    if (hi <= lo) throw std::invalid_argument("fit_power_law: empty window");

    std::vector<double> ln_n, ln_lam, scaled, inv_log;
    for (std::size_t i = lo; i < hi; ++i) {
        const double lam = values[i - 1];  // values[i-1] = lambda_i, 1-based index i
        if (!(lam > 0.0)) throw std::invalid_argument("fit_power_law: non-positive value in window");
        ln_n.push_back(std::log(static_cast<double>(i)));
        ln_lam.push_back(std::log(lam));
        scaled.push_back(std::pow(static_cast<double>(i), alpha_pred) * lam);
        inv_log.push_back(1.0 / std::log(static_cast<double>(i)));
    }
    const std::size_t m = ln_n.size();
    if (m < 10) throw std::invalid_argument("fit_power_law: fewer than 10 resolved values in window");

    auto linear_fit = [](const std::vector<double>& x, const std::vector<double>& y) {
        const std::size_t k = x.size();
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < k; ++i) {
            sx += x[i];
            sy += y[i];
            sxx += x[i] * x[i];
            sxy += x[i] * y[i];
        }
        const double denom = k * sxx - sx * sx;
        const double slope = (k * sxy - sx * sy) / denom;
        const double intercept = (sy - slope * sx) / k;
        return std::pair{slope, intercept};
    };

    FitReport report;
    report.n_lo = lo;
    report.n_hi = hi - 1;
    const auto [slope, intercept] = linear_fit(ln_n, ln_lam);
    report.alpha_hat = -slope;
    report.c_hat = std::exp(intercept);

    const auto [dslope, dintercept] = linear_fit(inv_log, scaled);
    report.drift_slope = dslope;
    report.extrapolated_coeff = dintercept;

    double dev = 0.0;
    for (double s : scaled) dev = std::max(dev, std::abs(s / coeff_pred - 1.0));
    report.rel_deviation = coeff_pred != 0.0 ? dev : 0.0;

    // quadratic coefficient of log lam against log n: curvature of the decay
    {
        double s0 = m, s1 = 0, s2 = 0, s3 = 0, s4 = 0, t0 = 0, t1 = 0, t2 = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const double x = ln_n[i], y = ln_lam[i];
            s1 += x;
            s2 += x * x;
            s3 += x * x * x;
            s4 += x * x * x * x;
            t0 += y;
            t1 += x * y;
            t2 += x * x * y;
        }
        // solve the 3x3 normal equations by Cramer's rule
        const double det = s0 * (s2 * s4 - s3 * s3) - s1 * (s1 * s4 - s2 * s3) +
                           s2 * (s1 * s3 - s2 * s2);
        const double det_c = s0 * (s2 * t2 - s3 * t1) - s1 * (s1 * t2 - s3 * t0) +
                             s2 * (s1 * t1 - s2 * t0);
        report.curvature = det != 0.0 ? det_c / det : 0.0;
    }
    report.suggested_family = std::abs(report.curvature) > 0.15 ? "widom" : "power";
    return report;
}

}  // namespace hankel
