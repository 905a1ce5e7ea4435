#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hankel/cutoffs.hpp"
#include "hankel/funcspace.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/specfun.hpp"
#include "hankel/symbol.hpp"

using namespace hankel;

TEST_CASE("kernel evaluation")
{
    const auto carleman = make_kernel({CarlemanPolyKernel{{1.0}}});
    CHECK(eval_kernel(carleman, 2.0).real() == doctest::Approx(0.5).epsilon(1e-15));

    const auto jump = make_kernel({JumpKernel{1.0, 0, 1.0}});
    CHECK(eval_kernel(jump, 1.5) == cxd(0.0, 0.0));
    CHECK(eval_kernel(jump, 0.5) == cxd(1.0, 0.0));

    const auto lp = make_kernel({LogPowerKernel{1.0, 1.0, false}});
    const double t = std::exp(2.0);  // chi_inf(e^2) = 1 since e^2 > 4
    CHECK(eval_kernel(lp, t).real() == doctest::Approx(std::exp(-2.0) / 2.0).epsilon(1e-14));

    CHECK_THROWS_AS(eval_kernel(carleman, 0.0), std::domain_error);
    CHECK_THROWS_AS(make_kernel({LogPowerKernel{1.0, -0.5, true}}), std::invalid_argument);
    CHECK_THROWS_AS(make_kernel({JumpKernel{1.0, 0, -1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_kernel({CarlemanPolyKernel{{0.5, 2.0}}}), std::invalid_argument);
}

TEST_CASE("sequence evaluation")
{
    const auto pw = make_sequence({PowerSeq{2.0}});
    CHECK(eval_sequence(pw, 3).real() == doctest::Approx(1.0 / 16.0).epsilon(1e-15));

    const auto lp = make_sequence({LogPowerSeq{1.0, 1.0, 1.0}});
    CHECK(eval_sequence(lp, 7).real() == doctest::Approx(1.0 / (7.0 * std::log(7.0))).epsilon(1e-15));
    CHECK(eval_sequence(lp, 0) == cxd(0.0, 0.0));
    CHECK(eval_sequence(lp, 1) == cxd(0.0, 0.0));

    const auto lpm = make_sequence({LogPowerSeq{1.0, 1.0, -1.0}});
    CHECK(eval_sequence(lpm, 8).real() == doctest::Approx(1.0 / (8.0 * std::log(8.0))).epsilon(1e-15));

    // zeta = -1 equals zeta = 1 times (-1)^j exactly
    for (long j = 0; j < 40; ++j) {
        const double sign = (j % 2) ? -1.0 : 1.0;
        CHECK(eval_sequence(lpm, j).real() == sign * eval_sequence(lp, j).real());
        CHECK(eval_sequence(lpm, j).imag() == 0.0);
    }

    CHECK_THROWS_AS(make_sequence({PowerSeq{0.9}}), std::invalid_argument);
    CHECK_THROWS_AS(make_sequence({LogPowerSeq{1.0, 1.0, cxd(0.5, 0.0)}}), std::invalid_argument);
}

TEST_CASE("sigma views and changes of variables")
{
    const auto one = constant_sigma(1.0);
    CHECK(one.sign(5.0) == 1.0);
    CHECK(one.eta(0.3) == 1.0);

    const auto ind = indicator_eta();
    // s(xi) = 1 iff xi <= log 2
    CHECK(ind.sign(std::log(2.0) - 1e-9) == 1.0);
    CHECK(ind.sign(std::log(2.0) + 1e-9) == 0.0);
    CHECK(ind.sigma(0.6) == 1.0);  // lambda >= 1/2
    CHECK(ind.sigma(0.4) == 0.0);
    CHECK_THROWS_AS(ind.eta(1.5), std::domain_error);

    // view round trips: lambda -> xi -> lambda and lambda -> mu -> lambda
    for (double lambda : {0.01, 0.3, 0.9999, 2.5, 1e4}) {
        const double xi = -std::log(lambda);
        CHECK(std::exp(-xi) == doctest::Approx(lambda).epsilon(1e-14));
    }
    // the mu chart loses digits only where mu approaches +-1
    for (double lambda : {0.05, 0.3, 0.9999, 2.5, 20.0}) {
        const double mu = (2.0 * lambda - 1.0) / (2.0 * lambda + 1.0);
        CHECK((1.0 + mu) / (2.0 * (1.0 - mu)) == doctest::Approx(lambda).epsilon(1e-14));
    }
    // values transported exactly through the views for a locally constant f
    CHECK(ind.sigma(2.0) == ind.sign(-std::log(2.0)));
    CHECK(ind.sigma(2.0) == ind.eta((2.0 * 2.0 - 1.0) / (2.0 * 2.0 + 1.0)));
}

TEST_CASE("model sigma star")
{
    const auto zero = model_sigma_star(1.0, 0.0, 0.0);
    for (double l : {0.1, 0.5, 1.0, 3.0, 10.0}) CHECK(zero.sigma(l) == 0.0);

    const auto s = model_sigma_star(1.0, 1.0, 1.0);
    CHECK(s.sigma(std::exp(-10.0)) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(s.sigma(0.6) == 0.0);    // both cutoffs vanish
    CHECK(chi0(1.0 / 3.0) > 0.0);  // transition region: value not forced to zero
    CHECK(chi0(1.0 / 3.0) < 1.0);
    CHECK(s.bounded);
    CHECK(s.sigma(1.0) == 0.0);  // dead zone around lambda = 1 stays finite

    // s*(xi) = |xi|^-a (chi0(e^-xi) + chi_inf(e^-xi))
    for (double xi : {-4.0, -2.0, -1.0, 1.0, 2.0, 5.0}) {
        const double lam = std::exp(-xi);
        const double want = std::pow(std::abs(xi), -1.0) * (chi0(lam) + chi_inf(lam));
        CHECK(s.sign(xi) == doctest::Approx(want).epsilon(1e-13));
    }
    CHECK_THROWS_AS(model_sigma_star(0.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("model eta star")
{
    const auto z = model_eta_star(1.0, 0.0, 0.0);
    CHECK(z.eta(-0.999) == 0.0);

    const auto e10 = model_eta_star(1.0, 1.0, 0.0);
    CHECK(e10.eta(0.0) == 0.0);  // r = 1/2, chi_inf(1/2) = 0 and kappa_m1 = 0

    const auto e11 = model_eta_star(1.0, 1.0, 1.0);
    const double mu = 1.0 - 1e-6;
    const double predicted = 1.0 / std::abs(std::log(1.0 - mu));
    CHECK(std::abs(e11.eta(mu) / predicted - 1.0) < 0.05);
    // approach to -1: kappa_m1 |log(1+mu)|^-1 with an O(1/log) correction
    const double mu2 = -1.0 + 1e-6;
    CHECK(std::abs(e11.eta(mu2) / (1.0 / std::abs(std::log(1e-6))) - 1.0) < 0.15);
}

TEST_CASE("carleman coefficient map")
{
    // P = 1
    const auto q0 = carleman_q_from_p(std::vector<double>{1.0});
    REQUIRE(q0.size() == 1);
    CHECK(q0[0] == doctest::Approx(1.0).epsilon(1e-15));

    // P(xi) = xi: q1 = -1, q0 = -euler_gamma
    const auto q1 = carleman_q_from_p(std::vector<double>{0.0, 1.0});
    REQUIRE(q1.size() == 2);
    CHECK(q1[1] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(q1[0] == doctest::Approx(-euler_gamma).epsilon(1e-12));

    // q_n = (-1)^n p_n for random polynomials
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int n = 0; n <= 4; ++n) {
        std::vector<double> p(n + 1);
        for (auto& v : p) v = d(rng);
        p[n] = 1.0;
        const auto q = carleman_q_from_p(p);
        CHECK(q[n] == doctest::Approx((n % 2 ? -1.0 : 1.0) * p[n]).epsilon(1e-13));
    }
}

TEST_CASE("carleman map against the Laplace oracle")
{
    // independent oracle: quadrature of int_0^inf e^{-lambda t} sum q_m log^m lambda
    // must reproduce P(log t)/t
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    auto laplace_of_logpoly = [](const std::vector<double>& q, double t) {
        NodeSet nodes = graded_gl(0.0, 1.0, 60, 20);
        nodes.append(geometric_gl(1.0, std::max(4.0, 60.0 / t), 20));
        return integrate(nodes, [&](double lam) {
            double poly = 0.0;
            const double L = std::log(lam);
            for (std::size_t m = q.size(); m-- > 0;) poly = poly * L + q[m];
            return std::exp(-lam * t) * poly;
        });
    };
    for (int n = 1; n <= 3; ++n) {
        std::vector<double> p(n + 1);
        for (auto& v : p) v = d(rng);
        p[n] = 1.0;
        const auto q = carleman_q_from_p(p);
        for (double t : {0.5, 1.0, 2.0, 10.0}) {
            double want = 0.0;
            const double L = std::log(t);
            for (std::size_t m = p.size(); m-- > 0;) want = want * L + p[m];
            want /= t;
            const double got = laplace_of_logpoly(q, t);
            CHECK(std::abs(got - want) <= 1e-6 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("symbol taylor coefficients")
{
    // constant symbol via the custom evaluator
    AnalyticSymbol one;
    one.alpha = 1.0;
    one.custom = [](cxd) { return cxd(1.0, 0.0); };
    const auto g1 = symbol_taylor_coeffs(one, 8, 1e-10);
    CHECK(std::abs(g1[0] - 1.0) < 1e-9);
    for (std::size_t j = 1; j < g1.size(); ++j) CHECK(std::abs(g1[j]) < 1e-9);

    // alpha = 0 calibration: omega = -log(1 - z), g(j) = 1/j
    AnalyticSymbol logsym;
    logsym.alpha = 0.0;
    logsym.terms.push_back(SymbolTerm{});
    const auto g2 = symbol_taylor_coeffs(logsym, 24, 1e-10);
    CHECK(std::abs(g2[0]) < 1e-9);
    for (std::size_t j = 1; j < g2.size(); ++j) CHECK(std::abs(g2[j] - 1.0 / double(j)) < 1e-8);

    // nonvanishing violation: u = 0 makes -log(zeta - z) vanish at z = 0
    AnalyticSymbol bad;
    bad.alpha = 2.0;
    bad.terms.push_back(SymbolTerm{});
    CHECK_THROWS_AS(symbol_taylor_coeffs(bad, 8), std::runtime_error);

    // u = 1 shifts the zero away; coefficients must be radius-independent
    AnalyticSymbol ok;
    ok.alpha = 2.0;
    ok.terms.push_back(SymbolTerm{{cxd(1.0, 0.0)}, {cxd(1.0, 0.0)}, cxd(1.0, 0.0)});
    const auto a = symbol_taylor_coeffs(ok, 32, 1e-9);
    const auto b = symbol_taylor_coeffs(ok, 32, 1e-11);
    for (std::size_t j = 0; j < a.size(); ++j) CHECK(std::abs(a[j] - b[j]) < 1e-8);
    // omega(0) = (1 - log(1))^{-1} = 1
    CHECK(std::abs(a[0] - 1.0) < 1e-9);
}
