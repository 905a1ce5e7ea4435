#pragma once

#include <cstddef>
#include <vector>

#include "hankel/funcspace.hpp"
#include "hankel/quadrature.hpp"

namespace hankel {

/// Quadrature discretization of (Hu)(t) = int_0^T h(t+s) u(s) ds:
/// A_{ij} = sqrt(w_i) h(t_i + t_j) sqrt(w_j), symmetric.
struct NystromHankel {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> matrix;  // row-major dim x dim

    std::size_t dim() const { return nodes.size(); }
};

/// Nodes are composite Gauss-Legendre on (0, T); kernels singular at 0
/// (log-power at zero, Carleman polynomials) get a graded stack toward 0.
/// For jump kernels T = t0 captures the whole operator.
NystromHankel build_nystrom(const KernelSpec& h, double T, std::size_t target_nodes,
                            const QuadratureConfig& q = {});

}  // namespace hankel
