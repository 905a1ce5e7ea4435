#include "hankel/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace hankel {

void NodeSet::append(const NodeSet& other)
{
    x.insert(x.end(), other.x.begin(), other.x.end());
    w.insert(w.end(), other.w.begin(), other.w.end());
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n)
{
    static std::mutex mtx;
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    std::lock_guard lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");

    std::vector<double> x(n), w(n);
    // Newton iteration on P_n; nodes symmetric about 0.
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

NodeSet gl_panel(double a, double b, int n)
{
    const auto& [xr, wr] = gauss_legendre(n);
    NodeSet out;
    out.x.resize(n);
    out.w.resize(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        out.x[i] = mid + half * xr[i];
        out.w[i] = half * wr[i];
    }
    return out;
}

NodeSet composite_gl(double a, double b, int panels, int per_panel)
{
    if (panels < 1) throw std::invalid_argument("composite_gl: panels < 1");
    NodeSet out;
    out.x.reserve(static_cast<std::size_t>(panels) * per_panel);
    out.w.reserve(static_cast<std::size_t>(panels) * per_panel);
    for (int i = 0; i < panels; ++i) {
        const double lo = a + (b - a) * i / panels;
        const double hi = a + (b - a) * (i + 1) / panels;
        out.append(gl_panel(lo, hi, per_panel));
    }
    return out;
}

NodeSet graded_gl(double a, double b, int levels, int per_panel)
{
    if (levels < 1) throw std::invalid_argument("graded_gl: levels < 1");
    NodeSet out;
    const double len = b - a;
    double lo = a;
    for (int k = levels; k >= 0; --k) {
        const double hi = (k == 0) ? b : a + len * std::ldexp(1.0, -k);
        out.append(gl_panel(lo, hi, per_panel));
        lo = hi;
    }
    return out;
}

NodeSet geometric_gl(double a, double b, int per_panel)
{
    if (!(a > 0.0) || b <= a) throw std::invalid_argument("geometric_gl: need 0 < a < b");
    NodeSet out;
    double lo = a;
    while (lo < b) {
        const double hi = std::min(2.0 * lo, b);
        out.append(gl_panel(lo, hi, per_panel));
        lo = hi;
    }
    return out;
}

double integrate(const NodeSet& nodes, const std::function<double(double)>& f)
{
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += nodes.w[i] * f(nodes.x[i]);
    return s;
}

}  // namespace hankel
