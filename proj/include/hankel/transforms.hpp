#pragma once

#include <span>
#include <vector>

#include "hankel/funcspace.hpp"
#include "hankel/quadrature.hpp"

namespace hankel {

/// h(t) = int_0^infty e^{-t lambda} sigma(lambda) d lambda, by composite
/// Gauss-Legendre split at lambda = 1 (graded toward 0, geometric panels
/// above 1, truncated where the exponential is below tolerance). The result
/// is refinement-validated; throws std::runtime_error when the requested
/// tolerance is not met.
double laplace_forward(const SigmaSpec& sigma, double t, const QuadratureConfig& q = {});

/// Moments g(j) = int_{-1}^{1} eta(mu) mu^j d mu for j = 0..j_max, one graded
/// node set shared by all j.
std::vector<double> moments_from_eta(const SigmaSpec& eta, long j_max,
                                     const QuadratureConfig& q = {});

/// Laguerre coefficients g(j) = (j+1)^{-1} int_0^infty h(t) L_j^1(t) t e^{-t/2} dt;
/// the Hankel matrix built from them is the matrix of H(h) in the Laguerre basis.
/// Works with the weighted recurrence W_j = L_j^1 e^{-t/2} to avoid overflow.
std::vector<double> laguerre_project(const KernelSpec& h, long j_max,
                                     const QuadratureConfig& q = {});

/// Quadrature nodes/weights used by laguerre_project (exposed for the
/// orthogonality checks).
NodeSet laguerre_nodes(long j_max, const QuadratureConfig& q = {});

/// Uniform grid in log t: t_k = e^{x_k}, x_k = -X + k * (2X/M), M a power of two.
struct LogGrid {
    double X = 24.0;
    std::size_t M = 4096;

    double spacing() const { return 2.0 * X / static_cast<double>(M); }
    std::vector<double> log_points() const;
    std::vector<double> points() const;
};

struct MellinSamples {
    std::vector<double> x;       // natural (increasing) order
    std::vector<cxd> value;
};

/// (M u)(x) = (2 pi)^{-1/2} int_0^infty u(t) t^{-1/2 - ix} dt, computed as the
/// Fourier transform of t^{1/2} u(t) in log t.
MellinSamples mellin_grid(const LogGrid& grid, std::span<const double> u);

/// m-fold forward difference of g at j; requires values through j + m.
double iterated_difference(std::span<const double> g, int m, std::size_t j);

}  // namespace hankel
