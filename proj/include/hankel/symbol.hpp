#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace hankel {

using cxd = std::complex<double>;

/// One singular factor v(z) (-log(zeta - z) + u(z))^{1-alpha}; v and u are
/// polynomials in z given by their coefficients, zeta lies on the unit circle.
/// log(zeta - z) carries the branch log(1-r) + i arg(zeta) on the ray z = r zeta.
struct SymbolTerm {
    std::vector<cxd> v{cxd(1.0, 0.0)};
    std::vector<cxd> u{};
    cxd zeta{1.0, 0.0};
};

struct AnalyticSymbol {
    double alpha = 1.0;                // alpha = 0 degenerates to v (-log + u), no branch
    std::vector<SymbolTerm> terms;
    std::function<cxd(cxd)> custom;    // optional additive analytic evaluator
};

/// Taylor coefficients a_0..a_{count-1} of the symbol at z = 0, by sampling on
/// circles of radius r < 1 and discrete Fourier inversion. Two successive
/// (r, M) refinements must agree to `tol`; the nonvanishing condition
/// -log(zeta - z) + u(z) != 0 is checked by disc sampling and by the winding
/// number of the boundary curve. Throws std::runtime_error on violation or
/// non-convergence.
std::vector<cxd> symbol_taylor_coeffs(const AnalyticSymbol& symbol, std::size_t count,
                                      double tol = 1e-9);

}  // namespace hankel
