#include "hankel/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hankel/gridfourier.hpp"
#include "hankel/kernels.hpp"

namespace hankel {

namespace {

NodeSet laplace_nodes(double t, int per, int levels)
{
    // graded toward the log singularity at 0, geometric panels above 1,
    // truncated where e^{-t lambda} is negligible
    NodeSet nodes = graded_gl(0.0, 1.0, levels, per);
    const double lam_max = std::max(4.0, 45.0 / t);
    nodes.append(geometric_gl(1.0, lam_max, per));
    return nodes;
}

double laplace_eval(const SigmaSpec& sigma, double t, const NodeSet& nodes)
{
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        s += nodes.w[i] * std::exp(-t * nodes.x[i]) * sigma.sigma(nodes.x[i]);
    return s;
}

}  // namespace

double laplace_forward(const SigmaSpec& sigma, double t, const QuadratureConfig& q)
{
    if (!(t > 0.0)) throw std::domain_error("laplace_forward: t must be > 0");
    const double coarse = laplace_eval(sigma, t, laplace_nodes(t, q.nodes_per_panel, q.grading_levels));
    const double fine =
        laplace_eval(sigma, t, laplace_nodes(t, q.nodes_per_panel + 8, q.grading_levels + 8));
    const double err = std::abs(fine - coarse);
    if (err > q.rel_tol * std::abs(fine) + q.abs_tol)
        throw std::runtime_error("laplace_forward: refinement disagreement above tolerance");
    return fine;
}

std::vector<double> moments_from_eta(const SigmaSpec& eta, long j_max, const QuadratureConfig& q)
{
    if (j_max < 0) throw std::domain_error("moments_from_eta: j_max must be >= 0");
    // panels graded toward both endpoints; mu = -1 + u and mu = 1 - u
    NodeSet half = graded_gl(0.0, 1.0, q.grading_levels, q.nodes_per_panel);
    std::vector<double> mu, c;
    mu.reserve(2 * half.size());
    c.reserve(2 * half.size());
    for (std::size_t i = 0; i < half.size(); ++i) {
        const double m_lo = -1.0 + half.x[i];
        const double m_hi = 1.0 - half.x[i];
        if (m_lo > -1.0) {
            mu.push_back(m_lo);
            c.push_back(half.w[i] * eta.eta(m_lo));
        }
        if (m_hi < 1.0) {
            mu.push_back(m_hi);
            c.push_back(half.w[i] * eta.eta(m_hi));
        }
    }
    std::vector<double> out(static_cast<std::size_t>(j_max) + 1);
    kernels::moment_accumulate(mu, c, out);
    return out;
}

NodeSet laguerre_nodes(long j_max, const QuadratureConfig& q)
{
    // dyadic panels toward 0 resolve the clustered Laguerre zeros; unit-width
    // panels continue to T where the weighted functions have decayed
    NodeSet nodes = graded_gl(0.0, 1.0, 40, q.nodes_per_panel);
    const double T = 4.0 * static_cast<double>(std::max<long>(j_max, 1)) + 128.0;
    const int panels = static_cast<int>(T);
    nodes.append(composite_gl(1.0, T, panels, q.nodes_per_panel));
    return nodes;
}

std::vector<double> laguerre_project(const KernelSpec& h, long j_max, const QuadratureConfig& q)
{
    if (j_max < 0) throw std::domain_error("laguerre_project: j_max must be >= 0");
    const NodeSet nodes = laguerre_nodes(j_max, q);
    const std::size_t n = nodes.size();

    std::vector<double> ht(n);
    for (std::size_t i = 0; i < n; ++i) ht[i] = eval_kernel_real(h, nodes.x[i]);

    // W_j(t) = L_j^1(t) e^{-t/2}: W_0 = e^{-t/2}, W_1 = (2 - t) e^{-t/2},
    // (j+1) W_{j+1} = (2j + 2 - t) W_j - (j+1) W_{j-1}
    std::vector<double> wm(n), wj(n);
    std::vector<double> out(static_cast<std::size_t>(j_max) + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double e = std::exp(-0.5 * nodes.x[i]);
        wm[i] = e;
        wj[i] = (2.0 - nodes.x[i]) * e;
    }
    auto project = [&](const std::vector<double>& wrow, long j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += nodes.w[i] * ht[i] * wrow[i] * nodes.x[i];
        return s / static_cast<double>(j + 1);
    };
    out[0] = project(wm, 0);
    if (j_max >= 1) out[1] = project(wj, 1);
    for (long j = 1; j < j_max; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const double next =
                ((2.0 * j + 2.0 - nodes.x[i]) * wj[i] - (j + 1.0) * wm[i]) / (j + 1.0);
            wm[i] = wj[i];
            wj[i] = next;
        }
        out[j + 1] = project(wj, j + 1);
    }
    return out;
}

std::vector<double> LogGrid::log_points() const
{
    std::vector<double> y(M);
    const double h = spacing();
    for (std::size_t k = 0; k < M; ++k) y[k] = -X + h * static_cast<double>(k);
    return y;
}

std::vector<double> LogGrid::points() const
{
    auto y = log_points();
    for (auto& v : y) v = std::exp(v);
    return y;
}

MellinSamples mellin_grid(const LogGrid& grid, std::span<const double> u)
{
    if (u.size() != grid.M) throw std::invalid_argument("mellin_grid: size mismatch");
    if (grid.M == 0 || (grid.M & (grid.M - 1)) != 0)
        throw std::invalid_argument("mellin_grid: M must be a power of two");
    const double h = grid.spacing();
    const auto y = grid.log_points();

    std::vector<cxd> w(grid.M);
    for (std::size_t k = 0; k < grid.M; ++k) w[k] = std::exp(0.5 * y[k]) * u[k];
    const double edge = std::max(std::abs(w.front()), std::abs(w.back()));
    const double peak = std::abs(*std::max_element(w.begin(), w.end(), [](cxd a, cxd b) {
        return std::abs(a) < std::abs(b);
    }));
    if (peak > 0.0 && edge > 1e-10 * peak)
        throw std::runtime_error("mellin_grid: samples do not decay at the grid ends");

    FftPlan plan(grid.M);
    auto F = grid_fourier(plan, w, h, -grid.X);

    const auto k = dual_grid(grid.M, h);
    std::vector<std::size_t> order(grid.M);
    for (std::size_t i = 0; i < grid.M; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return k[a] < k[b]; });

    MellinSamples out;
    out.x.resize(grid.M);
    out.value.resize(grid.M);
    for (std::size_t i = 0; i < grid.M; ++i) {
        out.x[i] = k[order[i]];
        out.value[i] = F[order[i]];
    }
    return out;
}

double iterated_difference(std::span<const double> g, int m, std::size_t j)
{
    if (m < 0) throw std::domain_error("iterated_difference: m must be >= 0");
    if (j + static_cast<std::size_t>(m) >= g.size())
        throw std::out_of_range("iterated_difference: values through j+m required");
    // sum_{i} (-1)^{m-i} binom(m, i) g(j+i)
    double s = 0.0;
    double binom = 1.0;
    for (int i = 0; i <= m; ++i) {
        const double sign = ((m - i) % 2) ? -1.0 : 1.0;
        s += sign * binom * g[j + static_cast<std::size_t>(i)];
        binom = binom * (m - i) / (i + 1.0);
    }
    return s;
}

}  // namespace hankel
