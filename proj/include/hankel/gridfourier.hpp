#pragma once

#include <span>
#include <vector>

#include "hankel/fft.hpp"

namespace hankel {

// Continuous Fourier transforms on uniform grids, with the normalization
// (F f)(k) = (2 pi)^{-1/2} int f(x) e^{-ikx} dx.
//
// Samples live at x_j = offset + j h (j = 0..M-1, M a power of two); the dual
// grid is k_m = m delta, delta = 2 pi/(M h), stored in FFT index order
// (m = 0, 1, ..., M/2-1, -M/2, ..., -1).

/// Frequencies of the dual grid in FFT order.
std::vector<double> dual_grid(std::size_t m, double h);

/// Samples of (F f)(k_m) from samples of f. `plan.size() == f.size()`.
std::vector<cxd> grid_fourier(const FftPlan& plan, std::span<const cxd> f, double h,
                              double offset);

/// Samples of f(x_j) = (2 pi)^{-1/2} int F(k) e^{+ikx} dk from dual-grid
/// samples F (FFT order, spacing delta); output on x_j = offset + j h.
std::vector<cxd> grid_fourier_synthesis(const FftPlan& plan, std::span<const cxd> F,
                                        double h, double offset);

}  // namespace hankel
