#include "hankel/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hankel {

std::size_t next_pow2(std::size_t n)
{
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

FftPlan::FftPlan(std::size_t n) : n_(n)
{
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("FftPlan: length must be a power of two");
    rev_.resize(n);
    std::size_t lg = 0;
    while ((std::size_t{1} << lg) < n) ++lg;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < lg; ++b)
            if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (lg - 1 - b);
        rev_[i] = static_cast<std::uint32_t>(r);
    }
    twiddle_.reserve(n);  // sum over stages of len/2 = n - 1
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        for (std::size_t j = 0; j < len / 2; ++j)
            twiddle_.push_back(std::polar(1.0, ang * static_cast<double>(j)));
    }
}

void FftPlan::transform(std::span<cxd> a, bool inv) const
{
    if (a.size() != n_) throw std::invalid_argument("FftPlan: size mismatch");
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t r = rev_[i];
        if (i < r) std::swap(a[i], a[r]);
    }
    std::size_t toff = 0;
    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t half = len / 2;
        for (std::size_t i = 0; i < n_; i += len) {
            for (std::size_t j = 0; j < half; ++j) {
                cxd w = twiddle_[toff + j];
                if (inv) w = std::conj(w);
                const cxd u = a[i + j];
                const cxd t = w * a[i + j + half];
                a[i + j] = u + t;
                a[i + j + half] = u - t;
            }
        }
        toff += half;
    }
}

void FftPlan::forward(std::span<cxd> a) const { transform(a, false); }

void FftPlan::inverse(std::span<cxd> a) const
{
    transform(a, true);
    const double s = 1.0 / static_cast<double>(n_);
    for (auto& v : a) v *= s;
}

}  // namespace hankel
