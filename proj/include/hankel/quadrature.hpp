#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace hankel {

/// Settings shared by the quadrature-backed transforms. Refinement doubles
/// the nodes per panel; graded meshes cluster geometrically toward declared
/// singular endpoints.
struct QuadratureConfig {
    int nodes_per_panel = 16;
    int grading_levels = 48;
    int max_panels = 40000;
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
};

struct NodeSet {
    std::vector<double> x;
    std::vector<double> w;

    std::size_t size() const { return x.size(); }
    void append(const NodeSet& other);
};

/// Gauss-Legendre rule on [-1, 1]; results are cached per n.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

/// n-point Gauss-Legendre nodes mapped to [a, b].
NodeSet gl_panel(double a, double b, int n);

/// Equal panels on [a, b].
NodeSet composite_gl(double a, double b, int panels, int per_panel);

/// Panels on [a, b] clustered geometrically toward `a` (ratio 1/2 per level).
NodeSet graded_gl(double a, double b, int levels, int per_panel);

/// Geometric panels [a, 2a], [2a, 4a], ... covering [a, b].
NodeSet geometric_gl(double a, double b, int per_panel);

double integrate(const NodeSet& nodes, const std::function<double(double)>& f);

}  // namespace hankel
