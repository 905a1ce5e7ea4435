#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hankel/funcspace.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/specfun.hpp"
#include "hankel/transforms.hpp"

using namespace hankel;

TEST_CASE("laplace forward")
{
    CHECK(laplace_forward(constant_sigma(1.0), 2.0) == doctest::Approx(0.5).epsilon(1e-12));

    SigmaSpec lin{SigmaView::half_line, [](double l) { return l; }, false};
    CHECK(laplace_forward(lin, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

    // sigma*(1,1,1) at t = 1000: t^{-1} (log t)^{-1} (1 + O(1/log t))
    const auto st = model_sigma_star(1.0, 1.0, 1.0);
    const double got = laplace_forward(st, 1000.0);
    const double lead = 1e-3 / std::log(1000.0);
    CHECK(std::abs(got / lead - 1.0) < 0.15);
}

TEST_CASE("laplace log-singularity rates")
{
    // I_m(t) = m! t^{-1-m} |log t|^{-alpha} (1 + O(1/|log t|)) for both endpoints;
    // realized with c = 1/2 (t -> infinity) and c = 2 (t -> 0), alpha = 1
    auto I_inf = [](int m, double t) {
        const auto nodes = graded_gl(0.0, 0.5, 52, 18);
        return integrate(nodes, [&](double lam) {
            return std::pow(-std::log(lam), -1.0) * std::pow(lam, m) * std::exp(-lam * t);
        });
    };
    auto I_zero = [](int m, double t) {
        const auto nodes = geometric_gl(2.0, std::max(8.0, 80.0 / t), 18);
        return integrate(nodes, [&](double lam) {
            return std::pow(std::log(lam), -1.0) * std::pow(lam, m) * std::exp(-lam * t);
        });
    };
    auto lead = [](int m, double t) {
        double f = 1.0;
        for (int i = 2; i <= m; ++i) f *= i;
        return f * std::pow(t, -1.0 - m) / std::abs(std::log(t));
    };
    for (int m : {0, 1}) {
        for (double t : {1e3, 1e4}) {
            const double ratio = I_inf(m, t) / lead(m, t);
            CHECK(ratio > 1.0 - 5.0 / std::abs(std::log(t)));
            CHECK(ratio < 1.0 + 5.0 / std::abs(std::log(t)));
        }
        for (double t : {1e-3, 1e-4}) {
            const double ratio = I_zero(m, t) / lead(m, t);
            CHECK(ratio > 1.0 - 5.0 / std::abs(std::log(t)));
            CHECK(ratio < 1.0 + 5.0 / std::abs(std::log(t)));
        }
    }
}

TEST_CASE("moments from eta")
{
    // eta == 1: exact monomial integrals
    const auto g1 = moments_from_eta(constant_sigma(1.0), 16);
    for (long j = 0; j <= 16; ++j) {
        const double want = (j % 2 == 0) ? 2.0 / (j + 1.0) : 0.0;
        CHECK(std::abs(g1[j] - want) < 1e-13);
    }

    // indicator eta: the Hilbert matrix sequence
    const auto g2 = moments_from_eta(indicator_eta(), 24);
    for (long j = 0; j <= 24; ++j) CHECK(g2[j] == doctest::Approx(1.0 / (j + 1.0)).epsilon(1e-12));

    // eta*(1,1,0) at large j: g ~ j^{-1} (log j)^{-1}
    const auto eta = model_eta_star(1.0, 1.0, 0.0);
    const auto g3 = moments_from_eta(eta, 10000);
    const double lead = 1.0 / (1e4 * std::log(1e4));
    CHECK(std::abs(g3[10000] / lead - 1.0) < 0.25);
}

TEST_CASE("moment differences decay one log-power faster")
{
    const auto eta = model_eta_star(1.0, 1.0, 0.0);
    const long jmax = 100000;
    const auto g = moments_from_eta(eta, jmax + 2);
    // |d^m g(j)| ~ m! j^{-1-m} (log j)^{-alpha}; the relative error term is
    // O(1/log j), tested as a bounded ratio
    for (int m : {1, 2}) {
        double fact = m == 2 ? 2.0 : 1.0;
        for (long j : {1000L, 10000L, 100000L}) {
            const double diff = std::abs(iterated_difference(g, m, j));
            const double lead = fact * std::pow(double(j), -1.0 - m) / std::log(double(j));
            const double ratio = diff / lead;
            CHECK(ratio > 0.2);
            CHECK(ratio < 3.0);
        }
    }
}

TEST_CASE("iterated differences")
{
    std::vector<double> lin(10), quad(10), hil(10);
    for (int j = 0; j < 10; ++j) {
        lin[j] = j;
        quad[j] = double(j) * j;
        hil[j] = 1.0 / (j + 1.0);
    }
    CHECK(iterated_difference(lin, 1, 3) == 1.0);
    CHECK(iterated_difference(quad, 2, 2) == 2.0);
    CHECK(iterated_difference(hil, 1, 0) == doctest::Approx(-0.5));
    CHECK_THROWS_AS(iterated_difference(lin, 3, 8), std::out_of_range);
}

TEST_CASE("laguerre projection")
{
    // h = e^{-t/2} is the zeroth weighted mode
    const auto delta = laguerre_project(
        make_kernel({TabulatedKernel{[](double t) { return cxd(std::exp(-0.5 * t), 0.0); }}}), 12);
    CHECK(delta[0] == doctest::Approx(1.0).epsilon(1e-10));
    for (std::size_t j = 1; j < delta.size(); ++j) CHECK(std::abs(delta[j]) < 1e-10);

    // Carleman 1/t projects onto the even-index sequence 2/(j+1)
    const auto carleman = laguerre_project(make_kernel({CarlemanPolyKernel{{1.0}}}), 16);
    for (long j = 0; j <= 16; ++j) {
        const double want = (j % 2 == 0) ? 2.0 / (j + 1.0) : 0.0;
        CHECK(std::abs(carleman[j] - want) < 1e-9);
    }
}

TEST_CASE("laguerre orthogonality on the projection nodes")
{
    const long jmax = 64;
    const auto nodes = laguerre_nodes(jmax);
    const std::size_t n = nodes.size();
    // weighted functions W_j = L_j^1 e^{-t/2}
    std::vector<std::vector<double>> w(jmax + 1, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const double t = nodes.x[i];
        const double e = std::exp(-0.5 * t);
        w[0][i] = e;
        if (jmax >= 1) w[1][i] = (2.0 - t) * e;
        for (long j = 1; j < jmax; ++j)
            w[j + 1][i] = ((2.0 * j + 2.0 - t) * w[j][i] - (j + 1.0) * w[j - 1][i]) / (j + 1.0);
    }
    double worst = 0.0;
    for (long j = 0; j <= jmax; j += 8) {
        for (long k = j; k <= jmax; k += 8) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += nodes.w[i] * w[j][i] * w[k][i] * nodes.x[i];
            const double want = (j == k) ? double(j + 1) : 0.0;
            worst = std::max(worst, std::abs(s - want));
        }
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("mellin transform on the log grid")
{
    const LogGrid grid{24.0, 2048};
    const auto t = grid.points();

    // u = e^{-t}: (Mu)(0) = (2 pi)^{-1/2} Gamma(1/2); the Gamma-integral oracle.
    // t^{1/2} u decays like sqrt(t) toward t = 0, so this case needs a wide grid.
    {
        const auto nodes = graded_gl(0.0, 1.0, 90, 16);
        auto tail = geometric_gl(1.0, 64.0, 16);
        NodeSet all = nodes;
        all.append(tail);
        const double oracle =
            integrate(all, [](double s) { return std::exp(-s) / std::sqrt(s); });
        CHECK(oracle == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));

        const LogGrid wide{56.0, 4096};
        const auto tw = wide.points();
        std::vector<double> u(wide.M);
        for (std::size_t i = 0; i < wide.M; ++i) u[i] = std::exp(-tw[i]);
        const auto mu = mellin_grid(wide, u);
        // value at x = 0
        std::size_t at0 = 0;
        for (std::size_t i = 0; i < mu.x.size(); ++i)
            if (std::abs(mu.x[i]) < 1e-12) at0 = i;
        const double want = oracle / std::sqrt(2.0 * std::numbers::pi);
        CHECK(want == doctest::Approx(0.7071067811865476).epsilon(1e-12));
        CHECK(std::abs(mu.value[at0] - want) < 1e-9);
    }

    // gaussian in log t maps to a gaussian
    {
        std::vector<double> u(grid.M);
        for (std::size_t i = 0; i < grid.M; ++i) {
            const double y = std::log(t[i]);
            u[i] = std::exp(-0.5 * y * y) / std::sqrt(t[i]);  // t^{1/2} u = gaussian
        }
        const auto mu = mellin_grid(grid, u);
        for (std::size_t i = 0; i < mu.x.size(); i += 64)
            CHECK(std::abs(mu.value[i] - std::exp(-0.5 * mu.x[i] * mu.x[i])) < 1e-10);

        // Parseval: ||M u|| = ||u||
        double nu = 0.0;
        for (std::size_t i = 0; i < grid.M; ++i) nu += u[i] * u[i] * t[i] * grid.spacing();
        double nm = 0.0;
        const double dx = mu.x[1] - mu.x[0];
        for (const auto& v : mu.value) nm += std::norm(v) * dx;
        CHECK(std::abs(std::sqrt(nu) - std::sqrt(nm)) < 1e-10);
    }

    // insufficient decay is rejected
    {
        std::vector<double> u(grid.M, 1.0);
        CHECK_THROWS_AS(mellin_grid(grid, u), std::runtime_error);
    }
}
