#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace hankel {

using cxd = std::complex<double>;

/// Signed, sorted spectrum with convergence metadata. lambda_minus holds
/// lambda_n^+ of the negated operator; singular values are non-increasing.
struct SpectrumResult {
    std::vector<double> lambda_plus;
    std::vector<double> lambda_minus;
    std::vector<double> residual_plus;   // ||A v - lambda v|| per reported value
    std::vector<double> residual_minus;
    std::vector<double> singular;
    std::vector<double> residual_singular;
    int iterations = 0;
    bool converged = true;
    double norm_estimate = 0.0;
};

/// Operator action y = A u on complex vectors; must be safe for concurrent reads.
using MatVec = std::function<void(std::span<const cxd>, std::span<cxd>)>;

/// Full spectrum of a symmetric real matrix (row-major), Householder
/// tridiagonalization + implicit-shift QL (LAPACK dsyev). Rejects
/// non-symmetric input. Dense values are backward-stable; residual fields are
/// left zero.
SpectrumResult dense_sym_eig(std::span<const double> a, std::size_t n);

/// Full spectrum of a complex Hermitian matrix (row-major, LAPACK zheev).
SpectrumResult dense_herm_eig(std::span<const cxd> a, std::size_t n);

/// Eigenvalues of a symmetric tridiagonal matrix (LAPACK dstev).
std::vector<double> tridiag_eigenvalues(std::vector<double> diag, std::vector<double> off);

struct LanczosOptions {
    std::size_t wanted = 10;       // per sign branch
    std::size_t max_iter = 600;
    double tol = 1e-10;            // residual-bound tolerance, relative to ||A||
    unsigned seed = 77;
    bool validate_residuals = true;
};

/// k extreme eigenvalues of each sign branch of a self-adjoint operator by
/// Lanczos with full reorthogonalization. The start vector is a fixed
/// alternating-sign vector with seeded jitter, so runs are reproducible.
/// Non-convergence is reported through SpectrumResult::converged.
SpectrumResult lanczos_extreme(const MatVec& apply, std::size_t n, const LanczosOptions& opt);

struct GolubKahanOptions {
    std::size_t wanted = 10;
    std::size_t max_iter = 600;
    double tol = 1e-10;
    unsigned seed = 77;
    bool validate_residuals = true;
};

/// Leading singular values by Golub-Kahan bidiagonalization with full
/// reorthogonalization of both Krylov bases.
SpectrumResult singular_values(const MatVec& apply, const MatVec& apply_adjoint, std::size_t n,
                               const GolubKahanOptions& opt);

}  // namespace hankel
