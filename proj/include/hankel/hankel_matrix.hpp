#pragma once

#include <memory>
#include <span>
#include <vector>

#include "hankel/fft.hpp"
#include "hankel/funcspace.hpp"

namespace hankel {

/// N x N section with entries (j, k) -> g(j + k). The generating sequence is
/// frozen at construction together with its padded FFT image, so matvec costs
/// two transforms. Immutable and reentrant.
class HankelMatrix {
public:
    HankelMatrix(std::vector<cxd> generating, std::size_t n);

    static HankelMatrix from_sequence(const SequenceSpec& g, std::size_t n);
    static HankelMatrix from_values(std::span<const double> g, std::size_t n);

    std::size_t dim() const { return n_; }
    bool hermitian() const { return hermitian_; }
    const std::vector<cxd>& generating() const { return gen_; }
    cxd entry(std::size_t j, std::size_t k) const { return gen_[j + k]; }

    /// FFT product, O(N log N); equals the naive product to roundoff.
    void matvec(std::span<const cxd> u, std::span<cxd> y) const;
    /// G* u = conj(G conj(u)) (G is complex-symmetric).
    void matvec_adjoint(std::span<const cxd> u, std::span<cxd> y) const;
    /// Serial O(N^2) reference.
    void matvec_naive(std::span<const cxd> u, std::span<cxd> y) const;

    std::vector<cxd> dense() const;
    /// Requires a real generating sequence.
    std::vector<double> dense_real() const;

private:
    std::size_t n_;
    std::vector<cxd> gen_;
    bool hermitian_;
    std::size_t len_;
    std::shared_ptr<const FftPlan> plan_;
    std::vector<cxd> gen_hat_;
};

HankelMatrix build_hankel(const SequenceSpec& g, std::size_t n);

}  // namespace hankel
