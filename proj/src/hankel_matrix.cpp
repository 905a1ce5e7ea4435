#include "hankel/hankel_matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "hankel/kernels.hpp"

namespace hankel {

HankelMatrix::HankelMatrix(std::vector<cxd> generating, std::size_t n)
    : n_(n), gen_(std::move(generating))
{
    if (n_ == 0) throw std::invalid_argument("HankelMatrix: dimension must be >= 1");
    if (gen_.size() < 2 * n_ - 1)
        throw std::invalid_argument("HankelMatrix: generating values 0..2N-2 required");
    gen_.resize(2 * n_ - 1);
    hermitian_ = std::all_of(gen_.begin(), gen_.end(), [](cxd v) { return v.imag() == 0.0; });

    len_ = next_pow2(2 * n_);
    plan_ = std::make_shared<FftPlan>(len_);
    gen_hat_.assign(len_, cxd(0.0, 0.0));
    std::copy(gen_.begin(), gen_.end(), gen_hat_.begin());
    plan_->forward(gen_hat_);
}

HankelMatrix HankelMatrix::from_sequence(const SequenceSpec& g, std::size_t n)
{
    std::vector<cxd> vals(2 * n - 1);
    for (std::size_t j = 0; j < vals.size(); ++j) vals[j] = eval_sequence(g, static_cast<long>(j));
    return HankelMatrix(std::move(vals), n);
}

HankelMatrix HankelMatrix::from_values(std::span<const double> g, std::size_t n)
{
    std::vector<cxd> vals(g.begin(), g.end());
    return HankelMatrix(std::move(vals), n);
}

HankelMatrix build_hankel(const SequenceSpec& g, std::size_t n)
{
    return HankelMatrix::from_sequence(g, n);
}

void HankelMatrix::matvec(std::span<const cxd> u, std::span<cxd> y) const
{
    if (u.size() != n_ || y.size() != n_)
        throw std::invalid_argument("HankelMatrix::matvec: dimension mismatch");
    // (Hu)_j = (g * reverse(u))_{j + N - 1}: one linear convolution
    std::vector<cxd> work(len_, cxd(0.0, 0.0));
    for (std::size_t k = 0; k < n_; ++k) work[k] = u[n_ - 1 - k];
    plan_->forward(work);
    for (std::size_t i = 0; i < len_; ++i) work[i] *= gen_hat_[i];
    plan_->inverse(work);
    for (std::size_t j = 0; j < n_; ++j) y[j] = work[n_ - 1 + j];
}

void HankelMatrix::matvec_adjoint(std::span<const cxd> u, std::span<cxd> y) const
{
    if (hermitian_) {
        matvec(u, y);
        return;
    }
    std::vector<cxd> uc(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) uc[i] = std::conj(u[i]);
    matvec(uc, y);
    for (auto& v : y) v = std::conj(v);
}

void HankelMatrix::matvec_naive(std::span<const cxd> u, std::span<cxd> y) const
{
    kernels::hankel_matvec_naive_serial(gen_, u, y);
}

std::vector<cxd> HankelMatrix::dense() const
{
    std::vector<cxd> a(n_ * n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) a[j * n_ + k] = gen_[j + k];
    return a;
}

std::vector<double> HankelMatrix::dense_real() const
{
    if (!hermitian_) throw std::logic_error("HankelMatrix::dense_real: complex generating sequence");
    std::vector<double> a(n_ * n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) a[j * n_ + k] = gen_[j + k].real();
    return a;
}

}  // namespace hankel
