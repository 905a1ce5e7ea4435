#include "hankel/symbol.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hankel/fft.hpp"

namespace hankel {

namespace {

cxd eval_poly(const std::vector<cxd>& c, cxd z)
{
    cxd s = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) s = s * z + c[i];
    return s;
}

/// -log(zeta - z) + u(z) with the ray-anchored branch of the logarithm.
cxd inner_value(const SymbolTerm& term, cxd z)
{
    // log(zeta - z) = Log((zeta - z)/zeta) + i arg(zeta); (zeta - z)/zeta lies
    // in the closed right half-plane for |z| <= 1, so the principal Log is
    // continuous here.
    const cxd ratio = (term.zeta - z) / term.zeta;
    const cxd log_zeta_z = std::log(ratio) + cxd(0.0, std::arg(term.zeta));
    return -log_zeta_z + eval_poly(term.u, z);
}

void check_nonvanishing(const SymbolTerm& term)
{
    // coarse disc sampling; the winding check on the boundary curve covers
    // zeros the mesh misses
    for (double r : {0.0, 0.15, 0.3, 0.45, 0.6, 0.75, 0.9, 0.99}) {
        const int na = r == 0.0 ? 1 : 64;
        for (int a = 0; a < na; ++a) {
            const cxd z = std::polar(r, 2.0 * std::numbers::pi * a / na);
            if (std::abs(inner_value(term, z)) < 1e-9)
                throw std::runtime_error("symbol: -log(zeta - z) + u(z) vanishes on the disc");
        }
    }
}

/// Unwrapped arguments of w along the sampled circle, anchored so the sample
/// nearest the ray z = r zeta carries its principal argument.
std::vector<double> unwrap_args(const std::vector<cxd>& w, std::size_t anchor)
{
    const std::size_t m = w.size();
    std::vector<double> arg(m);
    arg[anchor] = std::arg(w[anchor]);
    for (std::size_t step = 1; step < m; ++step) {
        const std::size_t i = (anchor + step) % m;
        const std::size_t p = (anchor + step - 1) % m;
        double d = std::arg(w[i]) - std::arg(w[p]);
        while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
        while (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
        arg[i] = arg[p] + d;
    }
    return arg;
}

std::vector<cxd> coeffs_at(const AnalyticSymbol& symbol, double r, std::size_t m,
                           std::size_t count)
{
    std::vector<cxd> samples(m, cxd(0.0, 0.0));
    std::vector<cxd> w(m);
    for (const auto& term : symbol.terms) {
        const double phi = std::arg(term.zeta);
        std::size_t anchor = 0;
        double best = 1e300;
        for (std::size_t i = 0; i < m; ++i) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m);
            const cxd z = std::polar(r, theta);
            w[i] = inner_value(term, z);
            double da = std::remainder(theta - phi, 2.0 * std::numbers::pi);
            if (std::abs(da) < best) {
                best = std::abs(da);
                anchor = i;
            }
        }
        if (symbol.alpha == 0.0) {
            for (std::size_t i = 0; i < m; ++i) {
                const cxd z = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m));
                samples[i] += eval_poly(term.v, z) * w[i];
            }
            continue;
        }
        const auto arg = unwrap_args(w, anchor);
        // closed-curve winding must vanish when w has no zeros inside
        const double wind = arg[(anchor + m - 1) % m] - arg[anchor];
        if (std::abs(std::remainder(wind, 2.0 * std::numbers::pi)) > 1.0 ||
            std::abs(wind) > 2.0 * std::numbers::pi + 1.0)
            throw std::runtime_error("symbol: boundary winding indicates an interior zero");
        const double power = 1.0 - symbol.alpha;
        for (std::size_t i = 0; i < m; ++i) {
            const cxd z = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m));
            const cxd logw = cxd(std::log(std::abs(w[i])), arg[i]);
            samples[i] += eval_poly(term.v, z) * std::exp(power * logw);
        }
    }
    if (symbol.custom) {
        for (std::size_t i = 0; i < m; ++i) {
            const cxd z = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m));
            samples[i] += symbol.custom(z);
        }
    }

    FftPlan plan(m);
    plan.forward(samples);
    std::vector<cxd> out(count);
    double rpow = 1.0;
    for (std::size_t j = 0; j < count; ++j) {
        out[j] = samples[j] / (static_cast<double>(m) * rpow);
        rpow *= r;
    }
    return out;
}

}  // namespace

std::vector<cxd> symbol_taylor_coeffs(const AnalyticSymbol& symbol, std::size_t count,
                                      double tol)
{
    if (count == 0) return {};
    if (symbol.alpha < 0.0) throw std::invalid_argument("symbol: alpha must be >= 0");
    if (symbol.alpha != 0.0)
        for (const auto& term : symbol.terms) check_nonvanishing(term);

    std::size_t m = next_pow2(std::max<std::size_t>(4 * count, 256));
    double r = 0.88;
    std::vector<cxd> prev = coeffs_at(symbol, r, m, count);
    for (int pass = 0; pass < 6; ++pass) {
        const double r2 = 0.5 * (r + 1.0) - 0.03;  // second admissible radius
        const auto next = coeffs_at(symbol, r2, 2 * m, count);
        double worst = 0.0;
        for (std::size_t j = 0; j < count; ++j) {
            const double d = std::abs(next[j] - prev[j]);
            worst = std::max(worst, d / (1.0 + std::abs(next[j])));
        }
        if (worst <= tol) return next;
        prev = next;
        m *= 2;
        r = std::min(0.97, r + 0.02);
    }
    throw std::runtime_error("symbol_taylor_coeffs: refinement failed to converge");
}

}  // namespace hankel
