#pragma once

#include <complex>
#include <functional>
#include <span>
#include <variant>
#include <vector>

namespace hankel {

using cxd = std::complex<double>;

// ---------------------------------------------------------------------------
// Kernel specifications h(t) on the half-line
// ---------------------------------------------------------------------------

/// kappa t^{-1} |log t|^{-alpha} carried by chi_0 (endpoint zero) or chi_inf
/// (endpoint infinity).
struct LogPowerKernel {
    double kappa = 0.0;
    double alpha = 1.0;
    bool at_zero = true;
};

/// kappa t^{-1} (log t)^{-alpha} e^{-i rho t}, supported at infinity (chi_inf).
struct OscillatoryKernel {
    cxd kappa = 0.0;
    double alpha = 1.0;
    double rho = 0.0;
};

/// h0 (t0 - t)^l for t <= t0, zero beyond t0.
struct JumpKernel {
    double h0 = 1.0;
    int l = 0;
    double t0 = 1.0;
};

/// P(log t) / t with P given by its coefficients p[0] + p[1] x + ...
struct CarlemanPolyKernel {
    std::vector<double> p{1.0};
};

struct TabulatedKernel {
    std::function<cxd(double)> eval;
};

using KernelTerm =
    std::variant<LogPowerKernel, OscillatoryKernel, JumpKernel, CarlemanPolyKernel, TabulatedKernel>;

struct KernelSpec {
    std::vector<KernelTerm> terms;
    bool real_valued() const;
};

/// Validates term parameters (alpha > 0, t0 > 0, l >= 0, leading Carleman
/// coefficient 1 for degree >= 1); throws std::invalid_argument.
KernelSpec make_kernel(std::vector<KernelTerm> terms);

cxd eval_kernel(const KernelSpec& spec, double t);

/// eval_kernel for real-valued kernels; throws std::invalid_argument when the
/// value carries a non-negligible imaginary part.
double eval_kernel_real(const KernelSpec& spec, double t);

// ---------------------------------------------------------------------------
// Sequence specifications g(j)
// ---------------------------------------------------------------------------

/// kappa j^{-1} (log j)^{-alpha} zeta^{-j} for j >= 2, zero at j = 0, 1.
struct LogPowerSeq {
    cxd kappa = 0.0;
    double alpha = 1.0;
    cxd zeta = 1.0;  // |zeta| = 1
};

/// Moments of an eta function, supplied as an evaluator handle.
struct MomentSeq {
    std::function<double(long)> moment;
};

/// (j+1)^{-gamma}, gamma > 1.
struct PowerSeq {
    double gamma = 2.0;
};

struct TabulatedSeq {
    std::vector<cxd> values;
};

using SequenceTerm = std::variant<LogPowerSeq, MomentSeq, PowerSeq, TabulatedSeq>;

struct SequenceSpec {
    std::vector<SequenceTerm> terms;
    bool real_valued() const;
};

SequenceSpec make_sequence(std::vector<SequenceTerm> terms);

cxd eval_sequence(const SequenceSpec& spec, long j);

// ---------------------------------------------------------------------------
// Sigma functions: one function, three views
// ---------------------------------------------------------------------------

enum class SigmaView { half_line, line, interval };

/// One scalar function under the exact changes of variables
/// s(xi) = sigma(e^{-xi}) and sigma(lambda) = eta((2 lambda - 1)/(2 lambda + 1)).
struct SigmaSpec {
    SigmaView view = SigmaView::half_line;
    std::function<double(double)> f;
    bool bounded = false;

    double sigma(double lambda) const;  // lambda > 0
    double sign(double xi) const;       // xi real
    double eta(double mu) const;        // mu in (-1, 1), throws outside
};

SigmaSpec constant_sigma(double value);

/// eta = indicator of [0, 1]; moments give the Hilbert matrix.
SigmaSpec indicator_eta();

/// sigma*(lambda) = kappa_inf |log lambda|^{-alpha} chi_0(lambda)
///                + kappa_0  |log lambda|^{-alpha} chi_inf(lambda).
SigmaSpec model_sigma_star(double alpha, double kappa0, double kappa_inf);

/// eta*(mu) = |log r|^{-alpha} (kappa_1 chi_inf(r) + kappa_m1 chi_0(4 r)),
/// r = (1 + mu) / (2 (1 - mu)).
SigmaSpec model_eta_star(double alpha, double kappa1, double kappa_m1);

// ---------------------------------------------------------------------------
// Generalized Carleman coefficient map
// ---------------------------------------------------------------------------

/// q_m = (-1)^m sum_{j=m}^n binom(j, m) gamma^{(j-m)}(0) p_j with
/// gamma(z) = 1/Gamma(1-z); h(t) = P(log t)/t  iff  h = Laplace of sum q_m log^m.
std::vector<double> carleman_q_from_p(std::span<const double> p);

}  // namespace hankel
