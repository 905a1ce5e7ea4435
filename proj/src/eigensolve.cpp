#include "hankel/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace hankel {

namespace {

void split_branches(std::span<const double> eigs_ascending, SpectrumResult& out)
{
    for (auto it = eigs_ascending.rbegin(); it != eigs_ascending.rend(); ++it)
        if (*it > 0.0) out.lambda_plus.push_back(*it);
    for (double v : eigs_ascending)
        if (v < 0.0) out.lambda_minus.push_back(-v);
    out.singular.resize(eigs_ascending.size());
    for (std::size_t i = 0; i < eigs_ascending.size(); ++i)
        out.singular[i] = std::abs(eigs_ascending[i]);
    std::sort(out.singular.rbegin(), out.singular.rend());
    if (!eigs_ascending.empty())
        out.norm_estimate = std::max(std::abs(eigs_ascending.front()), std::abs(eigs_ascending.back()));
    out.residual_plus.assign(out.lambda_plus.size(), 0.0);
    out.residual_minus.assign(out.lambda_minus.size(), 0.0);
    out.residual_singular.assign(out.singular.size(), 0.0);
}

double dot_real(std::span<const cxd> a, std::span<const cxd> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (std::conj(a[i]) * b[i]).real();
    return s;
}

cxd dot(std::span<const cxd> a, std::span<const cxd> b)
{
    cxd s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm2(std::span<const cxd> a) { return std::sqrt(dot_real(a, a)); }

std::vector<cxd> start_vector(std::size_t n, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> jitter(-1e-3, 1e-3);
    std::vector<cxd> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double base = (i % 2 == 0) ? 1.0 : -1.0;
        v[i] = base * (1.0 + jitter(rng));
    }
    const double nv = norm2(v);
    for (auto& x : v) x /= nv;
    return v;
}

// two passes of classical Gram-Schmidt against the stored basis
void reorthogonalize(std::span<const std::vector<cxd>> basis, std::span<cxd> w)
{
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : basis) {
            const cxd c = dot(q, w);
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * q[i];
        }
}

struct RitzData {
    std::vector<double> theta;   // ascending
    std::vector<double> bound;   // |beta_m * last component|
    std::vector<double> last_row;
    std::vector<double> vectors; // column-major m x m (lapack col-major)
};

RitzData ritz_values(const std::vector<double>& alpha, const std::vector<double>& beta,
                     double beta_next)
{
    const auto m = static_cast<lapack_int>(alpha.size());
    RitzData out;
    out.theta = alpha;
    std::vector<double> off(beta.begin(), beta.end());
    out.vectors.assign(static_cast<std::size_t>(m) * m, 0.0);
    const lapack_int info =
        LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', m, out.theta.data(), off.data(), out.vectors.data(), m);
    if (info != 0) throw std::runtime_error("dstev failed");
    out.bound.resize(m);
    out.last_row.resize(m);
    for (lapack_int i = 0; i < m; ++i) {
        out.last_row[i] = out.vectors[static_cast<std::size_t>(i) * m + (m - 1)];
        out.bound[i] = std::abs(beta_next * out.last_row[i]);
    }
    return out;
}

}  // namespace

SpectrumResult dense_sym_eig(std::span<const double> a, std::size_t n)
{
    if (a.size() != n * n) throw std::invalid_argument("dense_sym_eig: size mismatch");
    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(a[i * n + j] - a[j * n + i]) > 1e-12 * std::max(1.0, scale))
                throw std::invalid_argument("dense_sym_eig: matrix is not symmetric");
    std::vector<double> work(a.begin(), a.end());
    std::vector<double> eig(n);
    const lapack_int info = LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'N', 'U', static_cast<lapack_int>(n),
                                          work.data(), static_cast<lapack_int>(n), eig.data());
    if (info != 0) throw std::runtime_error("dsyev failed");
    SpectrumResult out;
    split_branches(eig, out);
    return out;
}

SpectrumResult dense_herm_eig(std::span<const cxd> a, std::size_t n)
{
    if (a.size() != n * n) throw std::invalid_argument("dense_herm_eig: size mismatch");
    double scale = 0.0;
    for (const auto& v : a) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (std::abs(a[i * n + j] - std::conj(a[j * n + i])) > 1e-12 * std::max(1.0, scale))
                throw std::invalid_argument("dense_herm_eig: matrix is not hermitian");
    std::vector<cxd> work(a.begin(), a.end());
    std::vector<double> eig(n);
    const lapack_int info = LAPACKE_zheev(LAPACK_ROW_MAJOR, 'N', 'U', static_cast<lapack_int>(n),
                                          work.data(), static_cast<lapack_int>(n), eig.data());
    if (info != 0) throw std::runtime_error("zheev failed");
    SpectrumResult out;
    split_branches(eig, out);
    return out;
}

std::vector<double> tridiag_eigenvalues(std::vector<double> diag, std::vector<double> off)
{
    if (off.size() + 1 != diag.size()) throw std::invalid_argument("tridiag: size mismatch");
    const lapack_int info = LAPACKE_dstev(LAPACK_COL_MAJOR, 'N', static_cast<lapack_int>(diag.size()),
                                          diag.data(), off.data(), nullptr, 1);
    if (info != 0) throw std::runtime_error("dstev failed");
    return diag;
}

SpectrumResult lanczos_extreme(const MatVec& apply, std::size_t n, const LanczosOptions& opt)
{
    if (n == 0) throw std::invalid_argument("lanczos_extreme: empty operator");
    const std::size_t max_iter = std::min(opt.max_iter, n);
    std::vector<std::vector<cxd>> basis;
    basis.reserve(max_iter);
    std::vector<double> alpha, beta;

    basis.push_back(start_vector(n, opt.seed));
    std::vector<cxd> w(n);
    double beta_next = 0.0;
    bool exhausted = false;
    RitzData ritz;

    // true when the top min(wanted, available) Ritz values of the branch all
    // carry residual bounds below tolerance
    auto branch_converged = [&](const RitzData& r, bool positive) {
        const double scale = std::max(std::abs(r.theta.front()), std::abs(r.theta.back()));
        const double floor = 1e-14 * std::max(scale, 1e-300);
        std::size_t seen = 0;
        if (positive) {
            for (std::size_t i = r.theta.size(); i-- > 0 && seen < opt.wanted;) {
                if (r.theta[i] <= floor) break;
                if (r.bound[i] > opt.tol * scale) return false;
                ++seen;
            }
        } else {
            for (std::size_t i = 0; i < r.theta.size() && seen < opt.wanted; ++i) {
                if (r.theta[i] >= -floor) break;
                if (r.bound[i] > opt.tol * scale) return false;
                ++seen;
            }
        }
        return true;
    };

    std::size_t m = 0;
    while (m < max_iter) {
        apply(basis[m], w);
        if (m > 0)
            for (std::size_t i = 0; i < n; ++i) w[i] -= beta[m - 1] * basis[m - 1][i];
        const double a = dot_real(basis[m], w);
        for (std::size_t i = 0; i < n; ++i) w[i] -= a * basis[m][i];
        alpha.push_back(a);
        reorthogonalize(basis, w);
        beta_next = norm2(w);
        ++m;

        const double scale_est = std::max(std::abs(a), 1.0);
        if (beta_next <= 1e-14 * scale_est) {
            exhausted = true;  // invariant subspace found
            break;
        }
        if (m == max_iter) break;

        const bool check = (m % 25 == 0) || m + 1 == max_iter;
        if (check && m >= 2 * opt.wanted + 10) {
            ritz = ritz_values(alpha, beta, beta_next);
            if (branch_converged(ritz, true) && branch_converged(ritz, false)) break;
        }

        std::vector<cxd> next(n);
        for (std::size_t i = 0; i < n; ++i) next[i] = w[i] / beta_next;
        beta.push_back(beta_next);
        basis.push_back(std::move(next));
    }

    ritz = ritz_values(alpha, beta, exhausted ? 0.0 : beta_next);
    const double scale = ritz.theta.empty()
                             ? 0.0
                             : std::max(std::abs(ritz.theta.front()), std::abs(ritz.theta.back()));
    const double floor = 1e-14 * std::max(scale, 1e-300);

    SpectrumResult out;
    out.iterations = static_cast<int>(m);
    out.norm_estimate = scale;

    struct Pick {
        double theta;
        double bound;
        std::size_t idx;
    };
    std::vector<Pick> plus, minus;
    for (std::size_t i = 0; i < ritz.theta.size(); ++i) {
        if (ritz.theta[i] > floor) plus.push_back({ritz.theta[i], ritz.bound[i], i});
        else if (ritz.theta[i] < -floor) minus.push_back({-ritz.theta[i], ritz.bound[i], i});
    }
    std::sort(plus.begin(), plus.end(), [](auto& a, auto& b) { return a.theta > b.theta; });
    std::sort(minus.begin(), minus.end(), [](auto& a, auto& b) { return a.theta > b.theta; });
    if (plus.size() > opt.wanted) plus.resize(opt.wanted);
    if (minus.size() > opt.wanted) minus.resize(opt.wanted);

    // only residual-validated values are reported
    auto emit = [&](const std::vector<Pick>& picks, std::vector<double>& vals,
                    std::vector<double>& res, double sign) {
        std::vector<cxd> x(n), ax(n);
        for (const auto& p : picks) {
            if (p.bound > opt.tol * scale * 100.0) {
                out.converged = false;
                continue;
            }
            double residual = p.bound;
            if (opt.validate_residuals) {
                std::fill(x.begin(), x.end(), cxd(0.0, 0.0));
                for (std::size_t col = 0; col < alpha.size(); ++col) {
                    const double y = ritz.vectors[p.idx * alpha.size() + col];
                    if (y == 0.0) continue;
                    const auto& q = basis[col];
                    for (std::size_t i = 0; i < n; ++i) x[i] += y * q[i];
                }
                apply(x, ax);
                const double theta = sign * p.theta;
                double r2 = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    const cxd d = ax[i] - theta * x[i];
                    r2 += std::norm(d);
                }
                residual = std::sqrt(r2);
            }
            vals.push_back(p.theta);
            res.push_back(residual);
        }
    };
    emit(plus, out.lambda_plus, out.residual_plus, +1.0);
    emit(minus, out.lambda_minus, out.residual_minus, -1.0);

    out.singular.reserve(out.lambda_plus.size() + out.lambda_minus.size());
    out.singular.insert(out.singular.end(), out.lambda_plus.begin(), out.lambda_plus.end());
    out.singular.insert(out.singular.end(), out.lambda_minus.begin(), out.lambda_minus.end());
    std::sort(out.singular.rbegin(), out.singular.rend());
    out.residual_singular.assign(out.singular.size(), 0.0);
    return out;
}

SpectrumResult singular_values(const MatVec& apply, const MatVec& apply_adjoint, std::size_t n,
                               const GolubKahanOptions& opt)
{
    if (n == 0) throw std::invalid_argument("singular_values: empty operator");
    const std::size_t max_iter = std::min(opt.max_iter, n);

    std::vector<std::vector<cxd>> V, U;
    std::vector<double> alpha, beta;
    V.push_back(start_vector(n, opt.seed));
    std::vector<cxd> p(n), r(n);

    apply(V[0], p);
    double a = norm2(p);
    if (a == 0.0) {
        // operator annihilates the start vector; report a zero singular value
        SpectrumResult out;
        out.singular.assign(1, 0.0);
        out.residual_singular.assign(1, 0.0);
        return out;
    }
    for (auto& x : p) x /= a;
    U.push_back(p);
    alpha.push_back(a);

    std::size_t m = 1;
    bool exhausted = false;
    std::vector<double> poll;  // leading singular values at the previous check
    while (m < max_iter) {
        apply_adjoint(U[m - 1], r);
        for (std::size_t i = 0; i < n; ++i) r[i] -= alpha[m - 1] * V[m - 1][i];
        reorthogonalize(V, r);
        const double b = norm2(r);
        if (b <= 1e-14 * alpha[0]) {
            exhausted = true;
            break;
        }
        beta.push_back(b);
        std::vector<cxd> vn(n);
        for (std::size_t i = 0; i < n; ++i) vn[i] = r[i] / b;
        V.push_back(std::move(vn));

        apply(V[m], p);
        for (std::size_t i = 0; i < n; ++i) p[i] -= b * U[m - 1][i];
        reorthogonalize(U, p);
        a = norm2(p);
        if (a <= 1e-14 * alpha[0]) {
            exhausted = true;
            break;
        }
        std::vector<cxd> un(n);
        for (std::size_t i = 0; i < n; ++i) un[i] = p[i] / a;
        U.push_back(std::move(un));
        alpha.push_back(a);
        ++m;

        if (m >= 2 * opt.wanted + 10 && m % 25 == 0) {
            std::vector<double> d = alpha, e = beta;
            e.resize(d.size() - 1);
            const lapack_int info =
                LAPACKE_dbdsqr(LAPACK_COL_MAJOR, 'L', static_cast<lapack_int>(d.size()), 0, 0, 0,
                               d.data(), e.data(), nullptr, 1, nullptr, 1, nullptr, 1);
            if (info == 0) {
                const std::size_t kk = std::min<std::size_t>(opt.wanted, d.size());
                if (poll.size() == kk) {
                    double worst = 0.0;
                    for (std::size_t i = 0; i < kk; ++i)
                        worst = std::max(worst, std::abs(d[i] - poll[i]) / std::max(d[0], 1e-300));
                    if (worst < opt.tol) break;
                }
                poll.assign(d.begin(), d.begin() + kk);
            }
        }
    }

    const auto k = static_cast<lapack_int>(alpha.size());
    std::vector<double> d = alpha, e = beta;
    std::vector<double> vt(static_cast<std::size_t>(k) * k, 0.0), uu(static_cast<std::size_t>(k) * k, 0.0);
    for (lapack_int i = 0; i < k; ++i) {
        vt[static_cast<std::size_t>(i) * k + i] = 1.0;
        uu[static_cast<std::size_t>(i) * k + i] = 1.0;
    }
    e.resize(std::max<std::size_t>(1, static_cast<std::size_t>(k)) - 1, 0.0);
    const lapack_int info = LAPACKE_dbdsqr(LAPACK_COL_MAJOR, 'L', k, k, k, 0, d.data(), e.data(),
                                           vt.data(), k, uu.data(), k, nullptr, 1);
    if (info != 0) throw std::runtime_error("dbdsqr failed");

    SpectrumResult out;
    out.iterations = static_cast<int>(m);
    out.converged = exhausted || m < max_iter || alpha.size() >= 2 * opt.wanted;
    out.norm_estimate = d.empty() ? 0.0 : d[0];

    const std::size_t keep = std::min<std::size_t>(opt.wanted, d.size());
    std::vector<cxd> x(n), z(n), ax(n), az(n);
    for (std::size_t i = 0; i < keep; ++i) {
        double residual = 0.0;
        if (opt.validate_residuals) {
            std::fill(x.begin(), x.end(), cxd(0.0, 0.0));
            std::fill(z.begin(), z.end(), cxd(0.0, 0.0));
            for (std::size_t col = 0; col < static_cast<std::size_t>(k); ++col) {
                const double vy = vt[i + col * k];      // V_B^T row i -> component col
                const double uy = uu[col + i * k];      // U_B column i
                if (vy != 0.0)
                    for (std::size_t j = 0; j < n; ++j) x[j] += vy * V[col][j];
                if (uy != 0.0)
                    for (std::size_t j = 0; j < n; ++j) z[j] += uy * U[col][j];
            }
            apply(x, ax);
            apply_adjoint(z, az);
            double r1 = 0.0, r2 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                r1 += std::norm(ax[j] - d[i] * z[j]);
                r2 += std::norm(az[j] - d[i] * x[j]);
            }
            residual = std::sqrt(std::max(r1, r2));
        }
        out.singular.push_back(d[i]);
        out.residual_singular.push_back(residual);
    }
    return out;
}

}  // namespace hankel
