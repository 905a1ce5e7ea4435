#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hankel {

using cxd = std::complex<double>;

std::size_t next_pow2(std::size_t n);

/// Radix-2 complex FFT for a fixed power-of-two length. Twiddle factors and
/// the bit-reversal permutation are computed once at construction; the plan
/// is immutable afterwards and safe to share between threads.
class FftPlan {
public:
    explicit FftPlan(std::size_t n);

    std::size_t size() const { return n_; }

    /// X_k = sum_j x_j e^{-2 pi i jk/n}, in place.
    void forward(std::span<cxd> a) const;

    /// x_j = (1/n) sum_k X_k e^{+2 pi i jk/n}, in place.
    void inverse(std::span<cxd> a) const;

private:
    void transform(std::span<cxd> a, bool inv) const;

    std::size_t n_ = 0;
    std::vector<std::uint32_t> rev_;
    std::vector<cxd> twiddle_;  // concatenated per-stage tables, forward sign
};

}  // namespace hankel
