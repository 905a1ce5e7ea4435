#include "hankel/mellin_pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hankel/gridfourier.hpp"
#include "hankel/specfun.hpp"

namespace hankel {

namespace {

// fft order = [0 .. M/2-1, -M/2 .. -1]; natural order = [-M/2 .. M/2-1]
std::vector<cxd> fft_to_natural(std::span<const cxd> a)
{
    const std::size_t m = a.size();
    std::vector<cxd> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = a[(i + m / 2) % m];
    return out;
}

std::vector<cxd> natural_to_fft(std::span<const cxd> a)
{
    const std::size_t m = a.size();
    std::vector<cxd> out(m);
    for (std::size_t i = 0; i < m; ++i) out[(i + m / 2) % m] = a[i];
    return out;
}

std::size_t reflect_index(std::size_t m, std::size_t n) { return (n - m) % n; }

}  // namespace

std::vector<double> apply_hankel_via_psido(const SigmaSpec& sigma, const LogGrid& grid,
                                           std::span<const double> u)
{
    if (!sigma.bounded)
        throw std::invalid_argument("apply_hankel_via_psido: sigma must be bounded");
    const std::size_t M = grid.M;
    if (u.size() != M) throw std::invalid_argument("apply_hankel_via_psido: size mismatch");
    const double dy = grid.spacing();
    const double delta = 2.0 * std::numbers::pi / (static_cast<double>(M) * dy);
    const double xf = std::numbers::pi / dy;  // half-width of the Mellin frequency grid
    FftPlan plan(M);

    const auto y = grid.log_points();
    std::vector<cxd> w(M);
    for (std::size_t k = 0; k < M; ++k) w[k] = std::exp(0.5 * y[k]) * u[k];
    const double wmax = std::abs(*std::max_element(
        w.begin(), w.end(), [](cxd a, cxd b) { return std::abs(a) < std::abs(b); }));
    if (wmax > 0.0 && std::max(std::abs(w.front()), std::abs(w.back())) > 1e-10 * wmax)
        throw std::runtime_error("apply_hankel_via_psido: u does not decay at the grid ends");

    // Mellin transform, values on the frequency grid x_m (fft order)
    auto Mu = grid_fourier(plan, w, dy, -grid.X);

    const auto x = dual_grid(M, dy);
    std::vector<cxd> phase(M);
    for (std::size_t m = 0; m < M; ++m) {
        const cxd lg = log_gamma(cxd(0.5, -x[m]));
        phase[m] = std::polar(1.0, lg.imag());
    }

    // bold-M: reflect and multiply by the Gamma phase
    std::vector<cxd> f(M);
    for (std::size_t m = 0; m < M; ++m) f[m] = phase[m] * Mu[reflect_index(m, M)];

    // A = v(X) s(D) v(X) on the x grid; the D-dual grid is the original y grid
    std::vector<double> v_nat(M);
    for (std::size_t i = 0; i < M; ++i)
        v_nat[i] = standard_weight(-xf + delta * static_cast<double>(i));

    auto g = fft_to_natural(f);
    for (std::size_t i = 0; i < M; ++i) g[i] *= v_nat[i];
    auto gh = grid_fourier(plan, g, delta, -xf);
    const auto eta = dual_grid(M, delta);
    for (std::size_t k = 0; k < M; ++k) gh[k] *= sigma.sign(eta[k]);
    auto g2 = grid_fourier_synthesis(plan, gh, delta, -xf);
    for (std::size_t i = 0; i < M; ++i) g2[i] *= v_nat[i];
    auto af = natural_to_fft(g2);

    // bold-M inverse, then inverse Mellin
    std::vector<cxd> mu_out(M);
    for (std::size_t m = 0; m < M; ++m) {
        const std::size_t r = reflect_index(m, M);
        mu_out[m] = af[r] / phase[r];
    }
    auto w_out = grid_fourier_synthesis(plan, mu_out, dy, -grid.X);

    double imag_max = 0.0, real_max = 0.0;
    for (const auto& v : w_out) {
        imag_max = std::max(imag_max, std::abs(v.imag()));
        real_max = std::max(real_max, std::abs(v.real()));
    }
    if (real_max > 0.0 && imag_max > 1e-6 * real_max)
        throw std::runtime_error("apply_hankel_via_psido: unexpected imaginary residue");

    std::vector<double> out(M);
    for (std::size_t k = 0; k < M; ++k) out[k] = std::exp(-0.5 * y[k]) * w_out[k].real();
    return out;
}

std::vector<double> hankel_apply_direct(const std::function<double(double)>& h,
                                        const LogGrid& grid, std::span<const double> u,
                                        std::span<const std::size_t> at_indices)
{
    const std::size_t M = grid.M;
    if (u.size() != M) throw std::invalid_argument("hankel_apply_direct: size mismatch");
    const auto t = grid.points();
    const double dy = grid.spacing();
    std::vector<double> out(at_indices.size());
    // trapezoid in log s: int h(t+s) u(s) ds = int h(t+e^q) u(e^q) e^q dq
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(at_indices.size()); ++i) {
        const double tj = t[at_indices[i]];
        double s = 0.0;
        for (std::size_t k = 0; k < M; ++k) s += h(tj + t[k]) * u[k] * t[k];
        out[i] = s * dy;
    }
    return out;
}

}  // namespace hankel
