#include "hankel/funcspace.hpp"

#include <cmath>
#include <stdexcept>

#include "hankel/cutoffs.hpp"
#include "hankel/specfun.hpp"

namespace hankel {

namespace {

void validate(const KernelTerm& term)
{
    if (const auto* lp = std::get_if<LogPowerKernel>(&term)) {
        if (!(lp->alpha > 0.0)) throw std::invalid_argument("LogPower kernel: alpha must be > 0");
    } else if (const auto* os = std::get_if<OscillatoryKernel>(&term)) {
        if (!(os->alpha > 0.0)) throw std::invalid_argument("Oscillatory kernel: alpha must be > 0");
    } else if (const auto* jp = std::get_if<JumpKernel>(&term)) {
        if (!(jp->t0 > 0.0)) throw std::invalid_argument("Jump kernel: t0 must be > 0");
        if (jp->l < 0) throw std::invalid_argument("Jump kernel: l must be >= 0");
    } else if (const auto* cp = std::get_if<CarlemanPolyKernel>(&term)) {
        if (cp->p.empty()) throw std::invalid_argument("Carleman kernel: empty coefficients");
        if (cp->p.size() > 1 && cp->p.back() != 1.0)
            throw std::invalid_argument("Carleman kernel: leading coefficient must be 1");
    } else if (const auto* tb = std::get_if<TabulatedKernel>(&term)) {
        if (!tb->eval) throw std::invalid_argument("Tabulated kernel: missing evaluator");
    }
}

void validate(const SequenceTerm& term)
{
    if (const auto* lp = std::get_if<LogPowerSeq>(&term)) {
        if (!(lp->alpha > 0.0)) throw std::invalid_argument("LogPower sequence: alpha must be > 0");
        if (std::abs(std::abs(lp->zeta) - 1.0) > 1e-12)
            throw std::invalid_argument("LogPower sequence: |zeta| must be 1");
    } else if (const auto* pw = std::get_if<PowerSeq>(&term)) {
        if (!(pw->gamma > 1.0)) throw std::invalid_argument("Power sequence: gamma must be > 1");
    } else if (const auto* mo = std::get_if<MomentSeq>(&term)) {
        if (!mo->moment) throw std::invalid_argument("Moment sequence: missing evaluator");
    }
}

/// zeta^{-j}, exact for the fourth roots of unity.
cxd unit_power_neg(cxd zeta, long j)
{
    if (zeta == cxd(1.0, 0.0)) return 1.0;
    if (zeta == cxd(-1.0, 0.0)) return (j % 2 == 0) ? 1.0 : -1.0;
    if (zeta == cxd(0.0, 1.0) || zeta == cxd(0.0, -1.0)) {
        const long r = ((j % 4) + 4) % 4;
        static const cxd table_i[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};   // i^{-j}
        static const cxd table_mi[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // (-i)^{-j}
        return zeta.imag() > 0 ? table_i[r] : table_mi[r];
    }
    return std::polar(1.0, -static_cast<double>(j) * std::arg(zeta));
}

}  // namespace

bool KernelSpec::real_valued() const
{
    for (const auto& t : terms)
        if (std::holds_alternative<OscillatoryKernel>(t) || std::holds_alternative<TabulatedKernel>(t))
            return false;
    return true;
}

KernelSpec make_kernel(std::vector<KernelTerm> terms)
{
    for (const auto& t : terms) validate(t);
    return KernelSpec{std::move(terms)};
}

cxd eval_kernel(const KernelSpec& spec, double t)
{
    if (!(t > 0.0)) throw std::domain_error("eval_kernel: t must be > 0");
    cxd sum = 0.0;
    for (const auto& term : spec.terms) {
        if (const auto* lp = std::get_if<LogPowerKernel>(&term)) {
            const double cut = lp->at_zero ? chi0(t) : chi_inf(t);
            if (cut != 0.0)
                sum += lp->kappa * cut / (t * std::pow(std::abs(std::log(t)), lp->alpha));
        } else if (const auto* os = std::get_if<OscillatoryKernel>(&term)) {
            const double cut = chi_inf(t);
            if (cut != 0.0)
                sum += os->kappa * cut * std::polar(1.0, -os->rho * t) /
                       (t * std::pow(std::log(t), os->alpha));
        } else if (const auto* jp = std::get_if<JumpKernel>(&term)) {
            if (t <= jp->t0) sum += jp->h0 * std::pow(jp->t0 - t, jp->l);
        } else if (const auto* cp = std::get_if<CarlemanPolyKernel>(&term)) {
            const double u = std::log(t);
            double poly = 0.0;
            for (std::size_t m = cp->p.size(); m-- > 0;) poly = poly * u + cp->p[m];
            sum += poly / t;
        } else if (const auto* tb = std::get_if<TabulatedKernel>(&term)) {
            sum += tb->eval(t);
        }
    }
    return sum;
}

double eval_kernel_real(const KernelSpec& spec, double t)
{
    const cxd v = eval_kernel(spec, t);
    if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real())))
        throw std::invalid_argument("eval_kernel_real: kernel value is not real");
    return v.real();
}

bool SequenceSpec::real_valued() const
{
    for (const auto& t : terms) {
        if (const auto* lp = std::get_if<LogPowerSeq>(&t)) {
            // real iff kappa zeta^{-j} is real for all j: zeta = +-1 with real kappa
            if (lp->zeta.imag() != 0.0 || lp->kappa.imag() != 0.0) return false;
        } else if (const auto* tb = std::get_if<TabulatedSeq>(&t)) {
            for (const auto& v : tb->values)
                if (v.imag() != 0.0) return false;
        }
    }
    return true;
}

SequenceSpec make_sequence(std::vector<SequenceTerm> terms)
{
    for (const auto& t : terms) validate(t);
    return SequenceSpec{std::move(terms)};
}

cxd eval_sequence(const SequenceSpec& spec, long j)
{
    if (j < 0) throw std::domain_error("eval_sequence: j must be >= 0");
    cxd sum = 0.0;
    for (const auto& term : spec.terms) {
        if (const auto* lp = std::get_if<LogPowerSeq>(&term)) {
            if (j >= 2)
                sum += lp->kappa * unit_power_neg(lp->zeta, j) /
                       (static_cast<double>(j) * std::pow(std::log(static_cast<double>(j)), lp->alpha));
        } else if (const auto* mo = std::get_if<MomentSeq>(&term)) {
            sum += mo->moment(j);
        } else if (const auto* pw = std::get_if<PowerSeq>(&term)) {
            sum += std::pow(static_cast<double>(j) + 1.0, -pw->gamma);
        } else if (const auto* tb = std::get_if<TabulatedSeq>(&term)) {
            if (static_cast<std::size_t>(j) < tb->values.size()) sum += tb->values[j];
        }
    }
    return sum;
}

double SigmaSpec::sigma(double lambda) const
{
    if (!(lambda > 0.0)) throw std::domain_error("sigma: lambda must be > 0");
    switch (view) {
        case SigmaView::half_line: return f(lambda);
        case SigmaView::line: return f(-std::log(lambda));
        case SigmaView::interval: return f((2.0 * lambda - 1.0) / (2.0 * lambda + 1.0));
    }
    return 0.0;
}

double SigmaSpec::sign(double xi) const
{
    switch (view) {
        case SigmaView::line: return f(xi);
        case SigmaView::half_line: return f(std::exp(-xi));
        case SigmaView::interval: {
            const double l = std::exp(-xi);
            return f((2.0 * l - 1.0) / (2.0 * l + 1.0));
        }
    }
    return 0.0;
}

double SigmaSpec::eta(double mu) const
{
    if (!(mu > -1.0 && mu < 1.0)) throw std::domain_error("eta: mu must lie in (-1, 1)");
    switch (view) {
        case SigmaView::interval: return f(mu);
        case SigmaView::half_line: return f((1.0 + mu) / (2.0 * (1.0 - mu)));
        case SigmaView::line: return f(-std::log((1.0 + mu) / (2.0 * (1.0 - mu))));
    }
    return 0.0;
}

SigmaSpec constant_sigma(double value)
{
    return SigmaSpec{SigmaView::half_line, [value](double) { return value; }, true};
}

SigmaSpec indicator_eta()
{
    return SigmaSpec{SigmaView::interval,
                     [](double mu) { return (mu >= 0.0 && mu <= 1.0) ? 1.0 : 0.0; }, true};
}

SigmaSpec model_sigma_star(double alpha, double kappa0, double kappa_inf)
{
    if (!(alpha > 0.0)) throw std::invalid_argument("model_sigma_star: alpha must be > 0");
    auto f = [=](double lambda) {
        const double c0 = chi0(lambda);
        const double ci = chi_inf(lambda);
        if (c0 == 0.0 && ci == 0.0) return 0.0;
        const double L = std::pow(std::abs(std::log(lambda)), -alpha);
        return (kappa_inf * c0 + kappa0 * ci) * L;
    };
    return SigmaSpec{SigmaView::half_line, std::move(f), true};
}

SigmaSpec model_eta_star(double alpha, double kappa1, double kappa_m1)
{
    if (!(alpha > 0.0)) throw std::invalid_argument("model_eta_star: alpha must be > 0");
    auto f = [=](double mu) {
        if (mu <= -1.0 || mu >= 1.0) return 0.0;
        const double r = (1.0 + mu) / (2.0 * (1.0 - mu));
        if (r <= 0.0 || !std::isfinite(r)) return 0.0;
        const double w1 = chi_inf(r);
        const double w0 = chi0(4.0 * r);
        if (w1 == 0.0 && w0 == 0.0) return 0.0;
        const double L = std::pow(std::abs(std::log(r)), -alpha);
        return L * (kappa1 * w1 + kappa_m1 * w0);
    };
    return SigmaSpec{SigmaView::interval, std::move(f), true};
}

std::vector<double> carleman_q_from_p(std::span<const double> p)
{
    if (p.empty()) throw std::invalid_argument("carleman_q_from_p: empty polynomial");
    if (p.back() == 0.0 && p.size() > 1)
        throw std::invalid_argument("carleman_q_from_p: leading coefficient must be nonzero");
    const int n = static_cast<int>(p.size()) - 1;
    const auto a = recip_gamma_taylor(n);  // gamma^{(k)}(0) = k! a_k
    std::vector<double> q(n + 1, 0.0);
    for (int m = 0; m <= n; ++m) {
        double s = 0.0;
        for (int j = m; j <= n; ++j) {
            // binom(j, m) * gamma^{(j-m)}(0) = j!/(m!(j-m)!) * (j-m)! a_{j-m}
            double binom = 1.0;
            for (int i = 0; i < m; ++i) binom = binom * (j - i) / (i + 1);
            double deriv = a[j - m];
            for (int i = 2; i <= j - m; ++i) deriv *= i;
            s += binom * deriv * p[j];
        }
        q[m] = ((m % 2) ? -1.0 : 1.0) * s;
    }
    return q;
}

}  // namespace hankel
