#include "hankel/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hankel::kernels {

namespace {
void check_sizes(std::size_t g, std::size_t u, std::size_t y)
{
    if (u != y) throw std::invalid_argument("hankel matvec: dimension mismatch");
    if (g + 1 < 2 * u) throw std::invalid_argument("hankel matvec: generating sequence too short");
}
}  // namespace

void hankel_matvec_naive_serial(std::span<const cxd> g, std::span<const cxd> u,
                                std::span<cxd> y)
{
    check_sizes(g.size(), u.size(), y.size());
    const std::size_t n = u.size();
    for (std::size_t j = 0; j < n; ++j) {
        cxd s = 0.0;
        const cxd* row = g.data() + j;
        for (std::size_t k = 0; k < n; ++k) s += row[k] * u[k];
        y[j] = s;
    }
}

void hankel_matvec_naive(std::span<const cxd> g, std::span<const cxd> u, std::span<cxd> y)
{
    check_sizes(g.size(), u.size(), y.size());
    const std::size_t n = u.size();
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n); ++j) {
        cxd s = 0.0;
        const cxd* row = g.data() + j;
        for (std::size_t k = 0; k < n; ++k) s += row[k] * u[k];
        y[j] = s;
    }
}

void moment_accumulate_serial(std::span<const double> mu, std::span<const double> c,
                              std::span<double> out)
{
    if (mu.size() != c.size()) throw std::invalid_argument("moment_accumulate: size mismatch");
    std::vector<double> p(mu.size(), 1.0);
    for (std::size_t j = 0; j < out.size(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            s += c[i] * p[i];
            p[i] *= mu[i];
        }
        out[j] = s;
    }
}

void moment_accumulate(std::span<const double> mu, std::span<const double> c,
                       std::span<double> out)
{
    if (mu.size() != c.size()) throw std::invalid_argument("moment_accumulate: size mismatch");
    const std::size_t nodes = mu.size();
    const std::size_t jmax = out.size();
    // fixed 64-node blocks; per-block partial rows combined in block order
    const std::size_t bs = 64;
    const std::size_t nblocks = (nodes + bs - 1) / bs;
    std::vector<std::vector<double>> partial(nblocks);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nblocks); ++b) {
        const std::size_t lo = b * bs;
        const std::size_t hi = std::min(nodes, lo + bs);
        std::vector<double> p(mu.begin() + lo, mu.begin() + hi);
        for (auto& v : p) v = 1.0;
        auto& row = partial[b];
        row.assign(jmax, 0.0);
        for (std::size_t j = 0; j < jmax; ++j) {
            double s = 0.0;
            for (std::size_t i = lo; i < hi; ++i) {
                s += c[i] * p[i - lo];
                p[i - lo] *= mu[i];
            }
            row[j] = s;
        }
    }
    for (std::size_t j = 0; j < jmax; ++j) {
        double s = 0.0;
        for (std::size_t b = 0; b < nblocks; ++b) s += partial[b][j];
        out[j] = s;
    }
}

void nystrom_assemble_serial(std::span<const double> t, std::span<const double> w,
                             const std::function<double(double)>& k, std::span<double> a)
{
    const std::size_t n = t.size();
    if (w.size() != n || a.size() != n * n)
        throw std::invalid_argument("nystrom_assemble: size mismatch");
    std::vector<double> sw(n);
    for (std::size_t i = 0; i < n; ++i) sw[i] = std::sqrt(w[i]);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double v = sw[i] * k(t[i] + t[j]) * sw[j];
            a[i * n + j] = v;
            a[j * n + i] = v;
        }
    }
}

void nystrom_assemble(std::span<const double> t, std::span<const double> w,
                      const std::function<double(double)>& k, std::span<double> a)
{
    const std::size_t n = t.size();
    if (w.size() != n || a.size() != n * n)
        throw std::invalid_argument("nystrom_assemble: size mismatch");
    std::vector<double> sw(n);
    for (std::size_t i = 0; i < n; ++i) sw[i] = std::sqrt(w[i]);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        for (std::size_t j = i; j < n; ++j)
            a[i * n + j] = sw[i] * k(t[i] + t[j]) * sw[j];
    }
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 1; i < static_cast<std::ptrdiff_t>(n); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(i); ++j) a[i * n + j] = a[j * n + i];
}

}  // namespace hankel::kernels
