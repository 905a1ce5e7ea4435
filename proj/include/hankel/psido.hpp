#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "hankel/fft.hpp"

namespace hankel {

/// Grid realization of v(X) m(D) v(X) on x_i = -X + i (2X/M), M a power of
/// two, with the multiplier sampled on the periodic dual grid
/// xi_k in [-pi M/(2X), pi M/(2X)). Self-adjoint for real v and m; applying
/// it costs two FFTs plus diagonal scalings.
class GridPsiDO {
public:
    GridPsiDO(const std::function<double(double)>& weight,
              const std::function<double(double)>& multiplier, double X, std::size_t M,
              double rolloff_fraction = 0.0);

    std::size_t dim() const { return m_; }
    double domain_halfwidth() const { return x_; }
    double dual_halfwidth() const;
    const std::vector<double>& weights() const { return v_; }
    const std::vector<double>& grid() const { return xs_; }
    /// Multiplier samples in FFT order (after roll-off).
    const std::vector<double>& multiplier() const { return mult_; }

    void apply(std::span<const cxd> u, std::span<cxd> y) const;

    /// Row-major M x M Hermitian matrix.
    std::vector<cxd> dense() const;

private:
    std::size_t m_;
    double x_;
    std::vector<double> xs_, v_, mult_;
    std::shared_ptr<const FftPlan> plan_;
};

/// Validates that the weight has decayed below 1e-12 of its maximum at the
/// grid ends; throws std::invalid_argument otherwise. A nonzero
/// rolloff_fraction applies a smooth roll-off to the multiplier beyond
/// |xi| = rolloff_fraction * xi_max (for unbounded polynomial multipliers).
GridPsiDO build_psido(const std::function<double(double)>& weight,
                      const std::function<double(double)>& multiplier, double X,
                      std::size_t M, double rolloff_fraction = 0.0);

/// The universal weight of the Hankel correspondence, v(x) = sqrt(pi/cosh(pi x)).
std::function<double(double)> standard_weight_fn();

}  // namespace hankel
