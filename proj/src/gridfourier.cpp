#include "hankel/gridfourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hankel {

std::vector<double> dual_grid(std::size_t m, double h)
{
    const double delta = 2.0 * std::numbers::pi / (static_cast<double>(m) * h);
    std::vector<double> k(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto s = static_cast<std::ptrdiff_t>(i);
        const auto half = static_cast<std::ptrdiff_t>(m / 2);
        k[i] = delta * static_cast<double>(s < half ? s : s - static_cast<std::ptrdiff_t>(m));
    }
    return k;
}

std::vector<cxd> grid_fourier(const FftPlan& plan, std::span<const cxd> f, double h,
                              double offset)
{
    const std::size_t m = plan.size();
    if (f.size() != m) throw std::invalid_argument("grid_fourier: size mismatch");
    std::vector<cxd> a(f.begin(), f.end());
    plan.forward(a);
    // (F f)(k) = (2pi)^{-1/2} h e^{-ik offset} sum_j f_j e^{-2pi i jm/M}
    const double norm = h / std::sqrt(2.0 * std::numbers::pi);
    const auto k = dual_grid(m, h);
    for (std::size_t i = 0; i < m; ++i) a[i] *= norm * std::polar(1.0, -k[i] * offset);
    return a;
}

std::vector<cxd> grid_fourier_synthesis(const FftPlan& plan, std::span<const cxd> F,
                                        double h, double offset)
{
    const std::size_t m = plan.size();
    if (F.size() != m) throw std::invalid_argument("grid_fourier_synthesis: size mismatch");
    const double delta = 2.0 * std::numbers::pi / (static_cast<double>(m) * h);
    // f(x_j) = (2pi)^{-1/2} delta sum_m F_m e^{i k_m offset} e^{+2pi i mj/M}
    std::vector<cxd> a(F.begin(), F.end());
    const auto k = dual_grid(m, h);
    for (std::size_t i = 0; i < m; ++i) a[i] *= std::polar(1.0, k[i] * offset);
    plan.inverse(a);
    const double norm = delta * static_cast<double>(m) / std::sqrt(2.0 * std::numbers::pi);
    for (auto& v : a) v *= norm;
    return a;
}

}  // namespace hankel
