#pragma once

#include <span>
#include <vector>

#include "hankel/funcspace.hpp"
#include "hankel/transforms.hpp"

namespace hankel {

/// (Hu)(t_k) through the identity H = M^{-1} v(X) s(D) v(X) M, where M is the
/// Mellin transform with reflection and the Gamma phase
/// Gamma(1/2 - ix)/|Gamma(1/2 - ix)|. Requires bounded sigma and samples that
/// decay at the grid ends. Output is real for real input (the imaginary
/// residue is discarded after a magnitude check).
std::vector<double> apply_hankel_via_psido(const SigmaSpec& sigma, const LogGrid& grid,
                                           std::span<const double> u);

/// Direct quadrature of int_0^infty h(t+s) u(s) ds at the requested grid
/// indices; h is evaluated through the supplied callable. The independent
/// reference for the pipeline above.
std::vector<double> hankel_apply_direct(const std::function<double(double)>& h,
                                        const LogGrid& grid, std::span<const double> u,
                                        std::span<const std::size_t> at_indices);

}  // namespace hankel
