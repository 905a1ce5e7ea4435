#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hankel/cutoffs.hpp"
#include "hankel/fft.hpp"
#include "hankel/gridfourier.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/specfun.hpp"

using namespace hankel;

namespace {
// reference O(n^2) DFT
std::vector<cxd> dft(const std::vector<cxd>& a)
{
    const std::size_t n = a.size();
    std::vector<cxd> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            out[k] += a[j] * std::polar(1.0, -2.0 * std::numbers::pi * double(j * k) / double(n));
    return out;
}
}  // namespace

TEST_CASE("fft matches the direct DFT and inverts")
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (std::size_t n : {2u, 8u, 64u, 256u}) {
        FftPlan plan(n);
        std::vector<cxd> a(n);
        for (auto& v : a) v = cxd(d(rng), d(rng));
        auto ref = dft(a);
        auto b = a;
        plan.forward(b);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(b[i] - ref[i]) < 1e-11 * double(n));
        plan.inverse(b);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(b[i] - a[i]) < 1e-12);
    }
    CHECK_THROWS(FftPlan(12));
}

TEST_CASE("grid fourier: gaussian pair and round trip")
{
    const std::size_t m = 1024;
    const double X = 16.0;
    const double h = 2.0 * X / m;
    FftPlan plan(m);
    std::vector<cxd> f(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double x = -X + h * double(j);
        f[j] = std::exp(-0.5 * x * x);
    }
    auto F = grid_fourier(plan, f, h, -X);
    const auto k = dual_grid(m, h);
    // (F e^{-x^2/2})(k) = e^{-k^2/2}
    for (std::size_t i = 0; i < m; ++i)
        CHECK(std::abs(F[i] - std::exp(-0.5 * k[i] * k[i])) < 1e-12);
    auto back = grid_fourier_synthesis(plan, F, h, -X);
    for (std::size_t j = 0; j < m; ++j) CHECK(std::abs(back[j] - f[j]) < 1e-12);
}

TEST_CASE("complex log gamma")
{
    // |Gamma(1/2 + ix)|^2 = pi / cosh(pi x)
    for (double x : {0.0, 0.5, 1.0, 3.0, 10.0}) {
        const cxd lg = log_gamma(cxd(0.5, x));
        const double mag = std::exp(lg.real());
        CHECK(mag == doctest::Approx(standard_weight(x)).epsilon(1e-12));
    }
    // Gamma(5) = 24
    CHECK(std::exp(log_gamma(cxd(5.0, 0.0)).real()) == doctest::Approx(24.0).epsilon(1e-12));
    // reflection region
    const cxd g = log_gamma(cxd(0.25, 0.0));
    CHECK(std::exp(g.real()) == doctest::Approx(std::tgamma(0.25)).epsilon(1e-12));
}

TEST_CASE("reciprocal gamma Taylor coefficients")
{
    const auto a = recip_gamma_taylor(30);
    CHECK(a[0] == doctest::Approx(1.0));
    CHECK(a[1] == doctest::Approx(-euler_gamma).epsilon(1e-14));
    // a2 = gamma_E^2/2 - pi^2/12
    CHECK(a[2] == doctest::Approx(0.5 * euler_gamma * euler_gamma -
                                  std::numbers::pi * std::numbers::pi / 12.0)
                      .epsilon(1e-13));
    // complex-step derivative of 1/Gamma(1-z) at 0 equals a[1]
    const double hstep = 1e-8;
    const cxd val = std::exp(-log_gamma(cxd(1.0, -hstep)));  // 1/Gamma(1 - i h)
    CHECK(val.imag() / hstep == doctest::Approx(a[1]).epsilon(1e-6));
    // series reproduces 1/Gamma(1-z) at a real point
    const double z = 0.4;
    double acc = 0.0, zp = 1.0;
    for (const double c : a) {
        acc += c * zp;
        zp *= z;
    }
    CHECK(acc == doctest::Approx(1.0 / std::tgamma(1.0 - z)).epsilon(1e-12));
}

TEST_CASE("cutoff plateaus are exact and transitions smooth")
{
    for (int i = 0; i <= 400; ++i) {
        const double t = 1e-3 + (0.25 - 1e-3) * i / 400.0;
        CHECK(chi0(t) == 1.0);
    }
    for (int i = 0; i <= 400; ++i) {
        const double t = 0.5 + 10.0 * i / 400.0;
        CHECK(chi0(t) == 0.0);
    }
    for (int i = 0; i <= 400; ++i) {
        const double t = 1e-3 + (2.0 - 1e-3) * i / 400.0;
        CHECK(chi_inf(t) == 0.0);
    }
    for (int i = 0; i <= 400; ++i) {
        const double t = 4.0 + 20.0 * i / 400.0;
        CHECK(chi_inf(t) == 1.0);
    }
    for (double t = 0.26; t < 0.5; t += 0.01) {
        CHECK(chi0(t) > 0.0);
        CHECK(chi0(t) < 1.0);
    }

    // finite-difference derivatives vanish at the plateau boundaries
    const double h = 5e-3;
    for (double edge : {0.25, 0.5, 2.0, 4.0}) {
        auto f = edge < 1.0 ? chi0 : chi_inf;
        const double d1 = (f(edge + h) - f(edge - h)) / (2 * h);
        const double d2 = (f(edge + h) - 2 * f(edge) + f(edge - h)) / (h * h);
        const double d3 =
            (f(edge + 2 * h) - 2 * f(edge + h) + 2 * f(edge - h) - f(edge - 2 * h)) / (2 * h * h * h);
        CHECK(std::abs(d1) < 2e-3);
        CHECK(std::abs(d2) < 2.0);
        CHECK(std::abs(d3) < 4e2);  // smooth: no jump-scale 1/h^3 blowup
    }
}

TEST_CASE("gauss-legendre and graded meshes")
{
    // exactness on polynomials of degree 2n-1
    const auto panel = gl_panel(0.0, 1.0, 8);
    double s = 0.0;
    for (std::size_t i = 0; i < panel.size(); ++i) s += panel.w[i] * std::pow(panel.x[i], 15);
    CHECK(s == doctest::Approx(1.0 / 16.0).epsilon(1e-14));

    // graded mesh integrates an integrable endpoint singularity
    const auto graded = graded_gl(0.0, 1.0, 40, 12);
    const double v = integrate(graded, [](double x) { return std::log(x) * std::log(x); });
    CHECK(v == doctest::Approx(2.0).epsilon(1e-10));  // int_0^1 log^2 = 2

    const auto geo = geometric_gl(1.0, 4096.0, 12);
    const double w = integrate(geo, [](double x) { return std::exp(-x); });
    CHECK(w == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));

    // refinement convergence: doubling nodes changes the value below tolerance
    const auto fine = graded_gl(0.0, 1.0, 40, 24);
    const double v2 = integrate(fine, [](double x) { return std::log(x) * std::log(x); });
    CHECK(std::abs(v - v2) < 1e-10);
}
