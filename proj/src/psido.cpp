#include "hankel/psido.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hankel/cutoffs.hpp"
#include "hankel/gridfourier.hpp"
#include "hankel/specfun.hpp"

namespace hankel {

GridPsiDO::GridPsiDO(const std::function<double(double)>& weight,
                     const std::function<double(double)>& multiplier, double X, std::size_t M,
                     double rolloff_fraction)
    : m_(M), x_(X)
{
    if (M == 0 || (M & (M - 1)) != 0)
        throw std::invalid_argument("GridPsiDO: M must be a power of two");
    if (!(X > 0.0)) throw std::invalid_argument("GridPsiDO: X must be > 0");
    const double h = 2.0 * X / static_cast<double>(M);
    xs_.resize(M);
    v_.resize(M);
    for (std::size_t i = 0; i < M; ++i) {
        xs_[i] = -X + h * static_cast<double>(i);
        v_[i] = weight(xs_[i]);
    }
    const auto xi = dual_grid(M, h);
    const double xi_max = std::numbers::pi / h;
    mult_.resize(M);
    for (std::size_t k = 0; k < M; ++k) {
        double m = multiplier(xi[k]);
        if (rolloff_fraction > 0.0) {
            const double edge = rolloff_fraction * xi_max;
            m *= 1.0 - smooth_step((std::abs(xi[k]) - edge) / (xi_max - edge));
        }
        mult_[k] = m;
    }
    plan_ = std::make_shared<FftPlan>(M);
}

double GridPsiDO::dual_halfwidth() const
{
    return std::numbers::pi * static_cast<double>(m_) / (2.0 * x_);
}

void GridPsiDO::apply(std::span<const cxd> u, std::span<cxd> y) const
{
    if (u.size() != m_ || y.size() != m_)
        throw std::invalid_argument("GridPsiDO::apply: dimension mismatch");
    std::vector<cxd> work(m_);
    for (std::size_t i = 0; i < m_; ++i) work[i] = v_[i] * u[i];
    plan_->forward(work);
    for (std::size_t k = 0; k < m_; ++k) work[k] *= mult_[k];
    plan_->inverse(work);
    for (std::size_t i = 0; i < m_; ++i) y[i] = v_[i] * work[i];
}

std::vector<cxd> GridPsiDO::dense() const
{
    // A = V C V with circulant C, C_{jk} = c[(j-k) mod M], c = ifft(mult)
    std::vector<cxd> c(mult_.begin(), mult_.end());
    plan_->inverse(c);
    std::vector<cxd> a(m_ * m_);
    for (std::size_t j = 0; j < m_; ++j)
        for (std::size_t k = 0; k < m_; ++k)
            a[j * m_ + k] = v_[j] * c[(j + m_ - k) % m_] * v_[k];
    return a;
}

GridPsiDO build_psido(const std::function<double(double)>& weight,
                      const std::function<double(double)>& multiplier, double X,
                      std::size_t M, double rolloff_fraction)
{
    GridPsiDO op(weight, multiplier, X, M, rolloff_fraction);
    const auto& v = op.weights();
    double vmax = 0.0;
    for (double w : v) vmax = std::max(vmax, std::abs(w));
    const double edge = std::max(std::abs(v.front()), std::abs(v.back()));
    if (vmax > 0.0 && edge > 1e-12 * vmax)
        throw std::invalid_argument("build_psido: weight does not decay at the grid ends");
    return op;
}

std::function<double(double)> standard_weight_fn()
{
    return [](double x) { return standard_weight(x); };
}

}  // namespace hankel
