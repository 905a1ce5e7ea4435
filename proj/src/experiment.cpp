#include "hankel/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include "hankel/asymptotics.hpp"
#include "hankel/config.hpp"
#include "hankel/eigensolve.hpp"
#include "hankel/hankel_matrix.hpp"
#include "hankel/io_csv.hpp"
#include "hankel/kernels.hpp"
#include "hankel/mellin_pipeline.hpp"
#include "hankel/nystrom.hpp"
#include "hankel/psido.hpp"
#include "hankel/specfun.hpp"
#include "hankel/transforms.hpp"

namespace hankel {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Ctx {
    json cfg;
    RunOptions options;
    fs::path dir;
    ExperimentReport report;
    std::string stage = "parse";

    void check(const std::string& name, bool pass, const std::string& detail)
    {
        report.checks.push_back({name, pass, detail});
    }

    fs::path artifact(const std::string& name)
    {
        const fs::path p = dir / name;
        report.artifacts.push_back(p.string());
        return p;
    }
};

std::string fmtg(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::size_t scaled_pow2(std::size_t base, double refine)
{
    if (refine == 1.0) return base;
    return next_pow2(static_cast<std::size_t>(std::llround(base * refine)));
}

std::size_t scaled(std::size_t base, double refine)
{
    return static_cast<std::size_t>(std::llround(base * refine));
}

unsigned solver_seed(const Ctx& c)
{
    if (c.options.seed) return *c.options.seed;
    return c.cfg.value("seed", 77u);
}

void emit_plot(Ctx& c, const std::string& name, const CsvTable& t)
{
    if (!c.options.emit_plots) return;
    std::ofstream out(c.artifact(name));
    out << "#";
    for (const auto& h : t.header) out << " " << h;
    out << "\n";
    const std::size_t rows = t.columns.empty() ? 0 : t.columns[0].size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < t.columns.size(); ++k)
            out << (k ? " " : "") << t.columns[k][r];
        out << "\n";
    }
}

void write_law_json(Ctx& c, const AsymptoticLaw& law)
{
    json j;
    j["family"] = law.family == AsymptoticLaw::Family::power
                      ? "power"
                      : (law.family == AsymptoticLaw::Family::jump ? "jump" : "widom");
    j["exponent"] = law.exponent;
    j["a_plus"] = law.a_plus;
    j["a_minus"] = law.a_minus;
    j["provenance"] = law.provenance;
    std::ofstream(c.artifact("law.json")) << j.dump(2) << "\n";
}

void write_fit_json(Ctx& c, const FitReport& fit, const std::string& name = "fit.json")
{
    json j;
    j["alpha_hat"] = fit.alpha_hat;
    j["c_hat"] = fit.c_hat;
    j["n_lo"] = fit.n_lo;
    j["n_hi"] = fit.n_hi;
    j["rel_deviation"] = fit.rel_deviation;
    j["drift_slope"] = fit.drift_slope;
    j["extrapolated_coeff"] = fit.extrapolated_coeff;
    j["curvature"] = fit.curvature;
    j["suggested_family"] = fit.suggested_family;
    std::ofstream(c.artifact(name)) << j.dump(2) << "\n";
}

void write_spectrum_summary(Ctx& c, const SpectrumResult& s, double alpha,
                            const AsymptoticLaw& law)
{
    std::ofstream md(c.artifact("summary.md"));
    md << "# " << c.report.id << "\n\n";
    md << "| n | lambda_n+ | lambda_n- | n^a lambda_n+ | n^a lambda_n- | predicted a+ | predicted a- |\n";
    md << "|---|-----------|-----------|---------------|---------------|--------------|--------------|\n";
    const std::size_t rows = std::max(s.lambda_plus.size(), s.lambda_minus.size());
    for (std::size_t i = 0; i < rows; ++i) {
        const double na = std::pow(static_cast<double>(i + 1), alpha);
        const double lp = i < s.lambda_plus.size() ? s.lambda_plus[i] : 0.0;
        const double lm = i < s.lambda_minus.size() ? s.lambda_minus[i] : 0.0;
        md << "| " << (i + 1) << " | " << fmtg(lp) << " | " << fmtg(lm) << " | " << fmtg(na * lp)
           << " | " << fmtg(na * lm) << " | " << fmtg(law.a_plus) << " | " << fmtg(law.a_minus)
           << " |\n";
    }
}

SpectrumResult reload_spectrum(const fs::path& p)
{
    const CsvTable t = read_csv(p);
    SpectrumResult s;
    if (t.columns.size() < 5) return s;
    for (std::size_t i = 0; i < t.columns[0].size(); ++i) {
        if (t.columns[1][i] > 0.0) s.lambda_plus.push_back(t.columns[1][i]);
        if (t.columns[2][i] > 0.0) s.lambda_minus.push_back(t.columns[2][i]);
        if (t.columns[3][i] > 0.0) s.singular.push_back(t.columns[3][i]);
    }
    return s;
}

MatVec hankel_matvec(const HankelMatrix& h)
{
    return [&h](std::span<const cxd> u, std::span<cxd> y) { h.matvec(u, y); };
}

MatVec psido_matvec(const GridPsiDO& a)
{
    return [&a](std::span<const cxd> u, std::span<cxd> y) { a.apply(u, y); };
}

MatVec dense_matvec(const std::vector<double>& a, std::size_t n)
{
    return [&a, n](std::span<const cxd> u, std::span<cxd> y) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            cxd s = 0.0;
            const double* row = a.data() + static_cast<std::size_t>(i) * n;
            for (std::size_t k = 0; k < n; ++k) s += row[k] * u[k];
            y[i] = s;
        }
    };
}

// ---------------------------------------------------------------------------

void run_weyl_constants(Ctx& c)
{
    c.stage = "constants";
    const double tau_tol = c.cfg["gates"].value("tau_tol", 1e-12);
    const double weyl_tol = c.cfg["gates"].value("weyl_tol", 1e-8);

    c.check("tau(1) = 1/2", std::abs(tau(1.0) - 0.5) <= tau_tol,
            "tau(1) = " + fmtg(tau(1.0)));
    c.check("tau(1/2) = 1", std::abs(tau(0.5) - 1.0) <= tau_tol,
            "tau(1/2) = " + fmtg(tau(0.5)));

    CsvTable t;
    t.header = {"alpha", "tau", "weyl_plus"};
    t.columns.resize(3);
    for (const auto& ja : c.cfg.value("alphas", json::array({0.5, 1.0, 2.0}))) {
        const double a = ja.get<double>();
        const auto [ap, am] = weyl_coeff(a, 1.0, 0.0, [](double x) { return standard_weight(x); });
        t.columns[0].push_back(a);
        t.columns[1].push_back(tau(a));
        t.columns[2].push_back(ap);
        const double rel = std::abs(ap - tau(a)) / tau(a);
        c.check("weyl coefficient = tau at alpha=" + fmtg(a), rel <= weyl_tol,
                "weyl=" + fmtg(ap) + " tau=" + fmtg(tau(a)) + " rel=" + fmtg(rel));
    }
    write_csv(c.artifact("constants.csv"), t);
    emit_plot(c, "constants.dat", t);
}

void run_compare_representations(Ctx& c)
{
    c.stage = "build";
    const SigmaSpec sigma = sigma_from_json(c.cfg.at("sigma"));
    const auto N = scaled_pow2(c.cfg.value("N", 2048u), c.options.refine);
    const auto M = scaled_pow2(c.cfg.value("M", 4096u), c.options.refine);
    const double X = c.cfg.value("X", 24.0);
    const std::size_t k = c.cfg.value("k", 10u);
    const double eig_rel = c.cfg["gates"].value("eig_rel", 1e-2);
    const double vector_rel = c.cfg["gates"].value("vector_rel", 1e-3);

    const auto g = moments_from_eta(sigma, static_cast<long>(2 * N - 2));
    const auto H = HankelMatrix::from_values(g, N);

    c.stage = "solve-hankel";
    LanczosOptions lopt;
    lopt.wanted = k;
    lopt.seed = solver_seed(c);
    lopt.max_iter = std::min<std::size_t>(N, 40 * k + 200);
    const auto sh = lanczos_extreme(hankel_matvec(H), N, lopt);
    write_spectrum_csv(c.artifact("eigs_hankel.csv"), sh);

    c.stage = "solve-psido";
    const GridPsiDO A = build_psido(standard_weight_fn(),
                                    [&sigma](double xi) { return sigma.sign(xi); }, X, M);
    const auto sa = lanczos_extreme(psido_matvec(A), M, lopt);
    write_spectrum_csv(c.artifact("eigs_psido.csv"), sa);

    c.stage = "gate-eigs";
    const auto rh = reload_spectrum(c.dir / "eigs_hankel.csv");
    const auto ra = reload_spectrum(c.dir / "eigs_psido.csv");
    {
        const std::size_t m = std::min({k, rh.lambda_plus.size(), ra.lambda_plus.size()});
        double worst = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            worst = std::max(worst,
                             std::abs(rh.lambda_plus[i] - ra.lambda_plus[i]) / rh.lambda_plus[i]);
        std::string detail = "top-" + std::to_string(m) + " worst rel delta " + fmtg(worst);
        if (m < k) detail += " (only " + std::to_string(m) + " resolved)";
        c.check("top eigenvalues agree (rel " + fmtg(eig_rel) + ")", m == k && worst <= eig_rel,
                detail);
    }

    c.stage = "vector-check";
    const LogGrid grid{X, M};
    const auto t = grid.points();
    std::vector<double> u(M);
    for (std::size_t i = 0; i < M; ++i) {
        const double y = std::log(t[i]);
        u[i] = std::exp(-y * y);
    }
    const auto via = apply_hankel_via_psido(sigma, grid, u);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < M; i += M / 128)
        if (std::abs(std::log(t[i])) <= 8.0) idx.push_back(i);
    const auto direct = hankel_apply_direct(
        [&sigma](double tt) { return laplace_forward(sigma, tt); }, grid, u, idx);
    double dmax = 0.0;
    for (double v : direct) dmax = std::max(dmax, std::abs(v));
    double worst = 0.0;
    CsvTable vt;
    vt.header = {"t", "via_psido", "direct"};
    vt.columns.resize(3);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        vt.columns[0].push_back(t[idx[i]]);
        vt.columns[1].push_back(via[idx[i]]);
        vt.columns[2].push_back(direct[i]);
        if (std::abs(direct[i]) >= 1e-3 * dmax)
            worst = std::max(worst, std::abs(via[idx[i]] - direct[i]) / std::abs(direct[i]));
    }
    write_csv(c.artifact("vector_check.csv"), vt);
    emit_plot(c, "vector_check.dat", vt);
    c.check("pipeline matches direct quadrature (rel " + fmtg(vector_rel) + ")",
            worst <= vector_rel, "worst bulk rel error " + fmtg(worst));
}

void run_norm_growth(Ctx& c)
{
    c.stage = "build";
    std::vector<std::size_t> sizes;
    for (const auto& s : c.cfg.value("sizes", json::array({256, 512, 1024, 2048, 4096, 8192, 16384})))
        sizes.push_back(scaled_pow2(s.get<std::size_t>(), c.options.refine));
    const double slope_lo = c.cfg["gates"].value("slope_lo", -2.6);
    const double slope_hi = c.cfg["gates"].value("slope_hi", -1.4);

    CsvTable t;
    t.header = {"N", "norm", "pi_minus_norm"};
    t.columns.resize(3);
    for (const std::size_t N : sizes) {
        c.stage = "solve N=" + std::to_string(N);
        SequenceSpec seq = c.cfg.contains("sequence") ? sequence_from_json(c.cfg["sequence"])
                                                      : make_sequence({PowerSeq{1.0 + 1e-12}});
        std::vector<cxd> g(2 * N - 1);
        if (c.cfg.contains("sequence")) {
            for (std::size_t j = 0; j < g.size(); ++j)
                g[j] = eval_sequence(seq, static_cast<long>(j));
        } else {
            for (std::size_t j = 0; j < g.size(); ++j) g[j] = 1.0 / (static_cast<double>(j) + 1.0);
        }
        const HankelMatrix H(std::move(g), N);
        LanczosOptions lopt;
        lopt.wanted = 1;
        lopt.seed = solver_seed(c);
        lopt.max_iter = 400;
        lopt.tol = 1e-12;
        const auto s = lanczos_extreme(hankel_matvec(H), N, lopt);
        const double lam = s.lambda_plus.empty() ? 0.0 : s.lambda_plus[0];
        t.columns[0].push_back(static_cast<double>(N));
        t.columns[1].push_back(lam);
        t.columns[2].push_back(std::numbers::pi - lam);
    }
    write_csv(c.artifact("norms.csv"), t);
    emit_plot(c, "norms.dat", t);

    c.stage = "gate";
    const CsvTable r = read_csv(c.dir / "norms.csv");
    const auto& norms = r.columns[1];
    const auto& gaps = r.columns[2];
    bool bounded = true, increasing = true, gap_decreasing = true;
    for (std::size_t i = 0; i < norms.size(); ++i) {
        if (norms[i] > std::numbers::pi + 1e-10) bounded = false;
        if (i && norms[i] <= norms[i - 1]) increasing = false;
        if (i && gaps[i] >= gaps[i - 1]) gap_decreasing = false;
    }
    c.check("norm bounded by pi", bounded, "max norm " + fmtg(*std::max_element(norms.begin(), norms.end())));
    c.check("norm strictly increasing", increasing, "");
    c.check("pi - norm decreasing", gap_decreasing, "");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        const double x = std::log(std::log(r.columns[0][i]));
        const double y = std::log(gaps[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope =
        (gaps.size() * sxy - sx * sy) / (gaps.size() * sxx - sx * sx);
    c.check("log-log slope in [" + fmtg(slope_lo) + ", " + fmtg(slope_hi) + "]",
            slope >= slope_lo && slope <= slope_hi, "measured slope " + fmtg(slope));
}

void run_jump_law(Ctx& c)
{
    c.stage = "build";
    const KernelSpec kernel = kernel_from_json(c.cfg.at("kernel"));
    const auto* jp = std::get_if<JumpKernel>(&kernel.terms.at(0));
    if (!jp) throw ConfigError("kernel.terms[0]", "jump-law experiment needs a jump kernel");
    const auto nodes = scaled(c.cfg.value("nodes", 4000u), c.options.refine);
    const std::size_t n_lo = c.cfg["window"][0].get<std::size_t>();
    const std::size_t n_hi = c.cfg["window"][1].get<std::size_t>();
    const double rel = c.cfg["gates"].value("rel", 0.05);
    const double branch_rel = c.cfg["gates"].value("branch_rel", 0.03);

    QuadratureConfig q;
    const auto nys = build_nystrom(kernel, jp->t0, nodes, q);

    c.stage = "solve";
    const auto s = dense_sym_eig(nys.matrix, nys.dim());
    write_spectrum_csv(c.artifact("spectrum.csv"), s);
    const auto law = jump_law(jp->h0, jp->l, jp->t0);
    write_law_json(c, law);
    write_spectrum_summary(c, s, law.exponent, law);

    c.stage = "gate";
    const auto r = reload_spectrum(c.dir / "spectrum.csv");
    FitWindow w;
    w.n_lo = n_lo;
    w.n_hi = n_hi;
    const auto fit = fit_power_law(r.lambda_plus, w, law.exponent, law.a_plus);
    write_fit_json(c, fit);
    double worst_p = 0.0, worst_m = 0.0, worst_b = 0.0;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const double na = std::pow(static_cast<double>(n), law.exponent);
        worst_p = std::max(worst_p, std::abs(na * r.lambda_plus.at(n - 1) / law.a_plus - 1.0));
        worst_m = std::max(worst_m, std::abs(na * r.lambda_minus.at(n - 1) / law.a_minus - 1.0));
        worst_b = std::max(worst_b, std::abs(r.lambda_plus.at(n - 1) - r.lambda_minus.at(n - 1)) /
                                        r.lambda_plus.at(n - 1));
    }
    c.check("positive branch within " + fmtg(rel) + " of law", worst_p <= rel,
            "worst rel dev " + fmtg(worst_p));
    c.check("negative branch within " + fmtg(rel) + " of law", worst_m <= rel,
            "worst rel dev " + fmtg(worst_m));
    c.check("branches agree within " + fmtg(branch_rel), worst_b <= branch_rel,
            "worst branch delta " + fmtg(worst_b));
}

void run_spectrum_law(Ctx& c)
{
    c.stage = "build";
    const auto& op = c.cfg.at("operator");
    const std::string type = op.value("type", "hankel-moments");
    const unsigned seed = solver_seed(c);

    const auto& jlaw = c.cfg.at("law");
    const double alpha = jlaw.value("alpha", 1.0);
    AsymptoticLaw law;
    const std::string family = jlaw.value("type", "cr_a3");
    if (family == "cr_a3")
        law = law_cr_a3(alpha, jlaw.value("kappa1", 1.0), jlaw.value("kappa_m1", 0.0));
    else if (family == "thm_d1")
        law = law_thm_d1(alpha, jlaw.value("kappa0", 1.0), jlaw.value("kappa_inf", 0.0));
    else if (family == "thm_a4") {
        std::vector<cxd> ks;
        for (const auto& v : jlaw.value("kappa_abs", json::array({1.0})))
            ks.emplace_back(v.get<double>(), 0.0);
        law = law_thm_a4(alpha, ks);
    } else
        throw ConfigError("law.type", "unknown law family '" + family + "'");
    write_law_json(c, law);

    SpectrumResult s;
    LanczosOptions lopt;
    lopt.wanted = c.cfg.value("k", 170u);
    lopt.seed = seed;
    lopt.max_iter = c.cfg.value("max_iter", 700u);
    lopt.tol = 1e-9;

    if (type == "hankel-moments") {
        const SigmaSpec sigma = sigma_from_json(op.at("sigma"), "operator.sigma");
        const auto N = scaled_pow2(op.value("N", 8192u), c.options.refine);
        const auto g = moments_from_eta(sigma, static_cast<long>(2 * N - 2));
        const auto H = HankelMatrix::from_values(g, N);
        c.stage = "solve";
        s = lanczos_extreme(hankel_matvec(H), N, lopt);
    } else if (type == "hankel-sequence") {
        const SequenceSpec seq = sequence_from_json(op.at("sequence"), "operator.sequence");
        const auto N = scaled_pow2(op.value("N", 8192u), c.options.refine);
        const auto H = HankelMatrix::from_sequence(seq, N);
        c.stage = "solve";
        s = lanczos_extreme(hankel_matvec(H), N, lopt);
    } else if (type == "psido-sigma") {
        const SigmaSpec sigma = sigma_from_json(op.at("sigma"), "operator.sigma");
        const auto M = scaled_pow2(op.value("M", 8192u), c.options.refine);
        const double X = op.value("X", 24.0);
        const GridPsiDO A =
            build_psido(standard_weight_fn(), [&sigma](double xi) { return sigma.sign(xi); }, X, M);
        c.stage = "solve";
        s = lanczos_extreme(psido_matvec(A), M, lopt);
    } else {
        throw ConfigError("operator.type", "unknown operator type '" + type + "'");
    }
    write_spectrum_csv(c.artifact("spectrum.csv"), s);
    write_spectrum_summary(c, s, law.exponent, law);

    c.stage = "gate";
    const auto r = reload_spectrum(c.dir / "spectrum.csv");
    const std::size_t n_lo = c.cfg["window"][0].get<std::size_t>();
    const std::size_t n_hi = c.cfg["window"][1].get<std::size_t>();
    const double blo = c.cfg["gates"]["bracket"][0].get<double>();
    const double bhi = c.cfg["gates"]["bracket"][1].get<double>();
    const double extrap_rel = c.cfg["gates"].value("extrapolation_rel", 0.2);

    bool in_bracket = r.lambda_plus.size() >= n_hi;
    double lo_seen = 1e300, hi_seen = 0.0;
    for (std::size_t n = n_lo; n <= n_hi && in_bracket; ++n) {
        const double v = std::pow(static_cast<double>(n), law.exponent) * r.lambda_plus[n - 1];
        lo_seen = std::min(lo_seen, v);
        hi_seen = std::max(hi_seen, v);
        if (v < blo || v > bhi) in_bracket = false;
    }
    c.check("n^a lambda_n+ in [" + fmtg(blo) + ", " + fmtg(bhi) + "] over [" +
                std::to_string(n_lo) + ", " + std::to_string(n_hi) + "]",
            in_bracket,
            r.lambda_plus.size() < n_hi
                ? "only " + std::to_string(r.lambda_plus.size()) + " values resolved"
                : "range seen [" + fmtg(lo_seen) + ", " + fmtg(hi_seen) + "]");

    if (r.lambda_plus.size() >= n_hi) {
        FitWindow w;
        w.n_lo = n_lo;
        w.n_hi = n_hi;
        const auto fit = fit_power_law(r.lambda_plus, w, law.exponent, law.a_plus);
        write_fit_json(c, fit);
        const double rel = std::abs(fit.extrapolated_coeff - law.a_plus) / law.a_plus;
        c.check("extrapolated coefficient within " + fmtg(extrap_rel), rel <= extrap_rel,
                "extrapolated " + fmtg(fit.extrapolated_coeff) + " target " + fmtg(law.a_plus));
    } else {
        c.check("extrapolated coefficient within " + fmtg(extrap_rel), false,
                "window not resolved");
    }

    if (c.cfg["gates"].value("minus_vanishes", false)) {
        // negative branch must stay asymptotically negligible against a+
        double worst = 0.0;
        for (std::size_t n = 1; n <= r.lambda_minus.size() && n <= n_hi; ++n)
            worst = std::max(worst,
                             std::pow(static_cast<double>(n), law.exponent) * r.lambda_minus[n - 1]);
        c.check("n^a lambda_n- stays below 0.05 a+", worst <= 0.05 * law.a_plus,
                "max n^a lambda_n- = " + fmtg(worst));
    }
}

void run_twist(Ctx& c)
{
    c.stage = "build";
    const SequenceSpec seq = sequence_from_json(c.cfg.at("sequence"));
    const double tol = c.cfg["gates"].value("tol", 1e-10);
    CsvTable t;
    t.header = {"N", "max_multiset_delta"};
    t.columns.resize(2);
    for (const auto& js : c.cfg.value("sizes", json::array({128, 512}))) {
        const auto N = scaled(js.get<std::size_t>(), c.options.refine);
        c.stage = "solve N=" + std::to_string(N);
        std::vector<double> g(2 * N - 1), gt(2 * N - 1);
        for (std::size_t j = 0; j < g.size(); ++j) {
            g[j] = eval_sequence(seq, static_cast<long>(j)).real();
            gt[j] = (j % 2 ? -g[j] : g[j]);
        }
        const auto ha = HankelMatrix::from_values(g, N).dense_real();
        const auto hb = HankelMatrix::from_values(gt, N).dense_real();
        auto ea = dense_sym_eig(ha, N);
        auto eb = dense_sym_eig(hb, N);
        auto all = [](const SpectrumResult& s) {
            std::vector<double> v;
            for (double x : s.lambda_plus) v.push_back(x);
            for (double x : s.lambda_minus) v.push_back(-x);
            std::sort(v.begin(), v.end());
            return v;
        };
        const auto va = all(ea), vb = all(eb);
        double worst = std::abs(static_cast<double>(va.size()) - static_cast<double>(vb.size()));
        for (std::size_t i = 0; i < std::min(va.size(), vb.size()); ++i)
            worst = std::max(worst, std::abs(va[i] - vb[i]));
        t.columns[0].push_back(static_cast<double>(N));
        t.columns[1].push_back(worst);
    }
    write_csv(c.artifact("twist.csv"), t);

    c.stage = "gate";
    const auto r = read_csv(c.dir / "twist.csv");
    for (std::size_t i = 0; i < r.columns[0].size(); ++i)
        c.check("eigenvalue multisets coincide at N=" + fmtg(r.columns[0][i]),
                r.columns[1][i] <= tol, "max delta " + fmtg(r.columns[1][i]));
}

void run_widom(Ctx& c)
{
    c.stage = "build";
    const double gamma = c.cfg.value("gamma", 2.0);
    const auto N = scaled_pow2(c.cfg.value("N", 2048u), c.options.refine);
    const std::size_t n_lo = c.cfg["window"][0].get<std::size_t>();
    const std::size_t n_hi = c.cfg["window"][1].get<std::size_t>();
    const double floor = c.cfg["gates"].value("floor", 1e-12);
    const double ratio_rel = c.cfg["gates"].value("ratio_rel", 0.2);

    const SequenceSpec seq = make_sequence({PowerSeq{gamma}});
    const auto H = HankelMatrix::from_sequence(seq, N);
    c.stage = "solve";
    const auto s = dense_sym_eig(H.dense_real(), N);
    write_spectrum_csv(c.artifact("spectrum.csv"), s);

    CsvTable t;
    t.header = {"n", "lambda", "neg_log_over_sqrt_n", "widom_prediction"};
    t.columns.resize(4);
    for (std::size_t n = 1; n <= s.lambda_plus.size() && s.lambda_plus[n - 1] > floor; ++n) {
        t.columns[0].push_back(static_cast<double>(n));
        t.columns[1].push_back(s.lambda_plus[n - 1]);
        t.columns[2].push_back(-std::log(s.lambda_plus[n - 1]) / std::sqrt(static_cast<double>(n)));
        t.columns[3].push_back(widom_exponent(gamma, static_cast<double>(n)) /
                               std::sqrt(static_cast<double>(n)));
    }
    write_csv(c.artifact("widom.csv"), t);
    emit_plot(c, "widom.dat", t);

    c.stage = "gate";
    double most_negative = 0.0;
    for (double v : s.lambda_minus) most_negative = std::max(most_negative, v);
    c.check("no computed eigenvalue below -" + fmtg(floor), most_negative <= floor,
            "most negative " + fmtg(-most_negative));

    const auto r = read_csv(c.dir / "widom.csv");
    bool in_band = r.columns[0].size() >= n_hi;
    double worst = 0.0;
    const double target = std::numbers::pi * std::sqrt(2.0 * gamma);
    for (std::size_t i = 0; i < r.columns[0].size(); ++i) {
        const auto n = static_cast<std::size_t>(r.columns[0][i]);
        if (n < n_lo || n > n_hi) continue;
        const double rel = std::abs(r.columns[2][i] / target - 1.0);
        worst = std::max(worst, rel);
        if (rel > ratio_rel) in_band = false;
    }
    c.check("-log(lambda_n)/sqrt(n) within " + fmtg(ratio_rel) + " of " + fmtg(target), in_band,
            "worst rel dev " + fmtg(worst));
    c.check("positive values reach the floor", !r.columns[0].empty(),
            std::to_string(r.columns[0].size()) + " values above floor");
}

void run_localization_symmetry(Ctx& c)
{
    c.stage = "build";
    const double alpha = c.cfg.value("alpha", 1.0);
    const auto N = scaled_pow2(c.cfg.value("N", 8192u), c.options.refine);
    const std::size_t k = c.cfg.value("k", 160u);
    const std::size_t n_lo = c.cfg["window"][0].get<std::size_t>();
    const std::size_t n_hi = c.cfg["window"][1].get<std::size_t>();
    const double extrap_rel = c.cfg["gates"].value("extrapolation_rel", 0.25);
    const std::size_t exceed_at = c.cfg["gates"].value("exceed_at", 100u);
    const double exceed_value = c.cfg["gates"].value("exceed_value", 0.5);
    const std::size_t count_n = c.cfg["gates"].value("count_n", 100u);
    const double count_rel = c.cfg["gates"].value("count_rel", 0.10);

    // conjugate pair at zeta = +-i keeps g real
    const SequenceSpec seq = make_sequence(
        {LogPowerSeq{cxd(1.0, 0.0), alpha, cxd(0.0, 1.0)}, LogPowerSeq{cxd(1.0, 0.0), alpha, cxd(0.0, -1.0)}});
    const auto H = HankelMatrix::from_sequence(seq, N);
    std::vector<cxd> ks = {cxd(1.0, 0.0), cxd(1.0, 0.0)};
    const auto law = law_thm_a4(alpha, ks);
    write_law_json(c, law);

    c.stage = "solve-singular";
    GolubKahanOptions gopt;
    gopt.wanted = k;
    gopt.seed = solver_seed(c);
    gopt.max_iter = c.cfg.value("max_iter", 700u);
    const auto sv = singular_values(
        hankel_matvec(H), [&H](std::span<const cxd> u, std::span<cxd> y) { H.matvec_adjoint(u, y); },
        N, gopt);

    c.stage = "solve-branches";
    LanczosOptions lopt;
    lopt.wanted = k;
    lopt.seed = solver_seed(c);
    lopt.max_iter = c.cfg.value("max_iter", 700u);
    auto sb = lanczos_extreme(hankel_matvec(H), N, lopt);
    sb.singular = sv.singular;
    sb.residual_singular = sv.residual_singular;
    write_spectrum_csv(c.artifact("spectrum.csv"), sb);
    write_spectrum_summary(c, sb, alpha, law);

    c.stage = "gate";
    const auto r = reload_spectrum(c.dir / "spectrum.csv");
    if (r.singular.size() >= n_hi) {
        FitWindow w;
        w.n_lo = n_lo;
        w.n_hi = n_hi;
        const auto fit = fit_power_law(r.singular, w, alpha, law.a_plus);
        write_fit_json(c, fit);
        const double rel = std::abs(fit.extrapolated_coeff - law.a_plus) / law.a_plus;
        c.check("extrapolated n s_n within " + fmtg(extrap_rel) + " of " + fmtg(law.a_plus),
                rel <= extrap_rel, "extrapolated " + fmtg(fit.extrapolated_coeff));
    } else {
        c.check("extrapolated n s_n within " + fmtg(extrap_rel) + " of " + fmtg(law.a_plus), false,
                "only " + std::to_string(r.singular.size()) + " singular values resolved");
    }
    {
        bool ok = r.singular.size() >= exceed_at;
        std::string detail;
        if (ok) {
            const double v = static_cast<double>(exceed_at) * r.singular[exceed_at - 1];
            ok = v > exceed_value;
            detail = "n s_n at n=" + std::to_string(exceed_at) + " is " + fmtg(v);
        } else {
            detail = "value not resolved";
        }
        c.check("n s_n exceeds single-point value " + fmtg(exceed_value) + " by n=" +
                    std::to_string(exceed_at),
                ok, detail);
    }
    {
        // symmetry principle: branch counts above the 50th singular value
        const std::size_t half = std::min<std::size_t>(50, r.singular.size());
        const double eps = half ? r.singular[half - 1] : 0.0;
        std::size_t np = 0, nm = 0;
        for (std::size_t i = 0; i < std::min(count_n, r.lambda_plus.size()); ++i)
            if (r.lambda_plus[i] > eps) ++np;
        for (std::size_t i = 0; i < std::min(count_n, r.lambda_minus.size()); ++i)
            if (r.lambda_minus[i] > eps) ++nm;
        const double rel =
            std::abs(static_cast<double>(np) - static_cast<double>(nm)) /
            std::max<double>(1.0, std::max(np, nm));
        c.check("sign-branch counts differ by <= " + fmtg(count_rel), rel <= count_rel,
                "counts " + std::to_string(np) + " / " + std::to_string(nm) + " at eps=" + fmtg(eps));
    }
}

void run_carleman_grid(Ctx& c)
{
    c.stage = "build";
    const std::vector<double> p = c.cfg.at("p").get<std::vector<double>>();
    const auto M = scaled_pow2(c.cfg.value("M", 1024u), c.options.refine);
    const double X = c.cfg.value("X", 24.0);
    const double rolloff = c.cfg.value("rolloff", 0.8);
    const auto q = carleman_q_from_p(p);

    CsvTable qt;
    qt.header = {"m", "q_m"};
    qt.columns.resize(2);
    for (std::size_t m = 0; m < q.size(); ++m) {
        qt.columns[0].push_back(static_cast<double>(m));
        qt.columns[1].push_back(q[m]);
    }
    write_csv(c.artifact("q_coefficients.csv"), qt);

    auto multiplier = [&q](double xi) {
        double s = 0.0;
        for (std::size_t m = q.size(); m-- > 0;) s = s * xi + q[m];
        return s;
    };

    auto solve = [&](std::size_t grid_m) {
        const GridPsiDO A = build_psido(standard_weight_fn(), multiplier, X, grid_m, rolloff);
        return dense_herm_eig(A.dense(), grid_m);
    };

    c.stage = "solve";
    const auto s1 = solve(M);
    write_spectrum_csv(c.artifact("spectrum.csv"), s1);

    c.stage = "gate";
    const auto& gates = c.cfg["gates"];
    if (gates.value("kind", "sign-fill") == "sign-fill") {
        const double min_frac = gates.value("min_frac", 0.4);
        const auto r = reload_spectrum(c.dir / "spectrum.csv");
        const double total = static_cast<double>(r.lambda_plus.size() + r.lambda_minus.size());
        const double fp = r.lambda_plus.size() / total;
        const double fm = r.lambda_minus.size() / total;
        c.check("both sign branches carry >= " + fmtg(min_frac), fp >= min_frac && fm >= min_frac,
                "fractions " + fmtg(fp) + " / " + fmtg(fm));
    } else {
        const double threshold = gates.value("threshold", -0.1);
        const auto s2 = solve(2 * M);
        write_spectrum_csv(c.artifact("spectrum_refined.csv"), s2);
        const auto r1 = reload_spectrum(c.dir / "spectrum.csv");
        const auto r2 = reload_spectrum(c.dir / "spectrum_refined.csv");
        auto count_below = [&](const SpectrumResult& s) {
            std::size_t n = 0;
            for (double v : s.lambda_minus)
                if (-v < threshold) ++n;
            return n;
        };
        const std::size_t n1 = count_below(r1), n2 = count_below(r2);
        c.check("eigenvalues below " + fmtg(threshold) + " non-increasing under refinement",
                n2 <= n1, "counts " + std::to_string(n1) + " -> " + std::to_string(n2));
    }

    if (c.cfg.value("check_q0_oracle", false)) {
        // Laplace oracle for P(xi) = xi: integral of e^{-lambda t} (q0 + q1 log lambda)
        // must equal log(t)/t; in particular q0 = -euler_gamma.
        const double q0_tol = gates.value("q0_tol", 1e-8);
        c.check("q0 = -euler_gamma", std::abs(q[0] + euler_gamma) <= q0_tol,
                "q0 = " + fmtg(q[0]));
        SigmaSpec sig{SigmaView::half_line,
                      [&q](double lam) {
                          double s = 0.0;
                          const double L = std::log(lam);
                          for (std::size_t m = q.size(); m-- > 0;) s = s * L + q[m];
                          return s;
                      },
                      false};
        double worst = 0.0;
        for (double tt : {0.5, 2.0, 10.0}) {
            const double got = laplace_forward(sig, tt);
            const double want = std::log(tt) / tt;
            worst = std::max(worst, std::abs(got - want));
        }
        c.check("Laplace image equals P(log t)/t", worst <= 1e-6, "worst abs dev " + fmtg(worst));
    }
}

void run_transform_roundtrip(Ctx& c)
{
    c.stage = "build";
    const long j_max = c.cfg.value("j_max", 64);
    const double tol = c.cfg["gates"].value("tol", 1e-6);
    std::size_t idx = 0;
    for (const auto& js : c.cfg.at("sigmas")) {
        const std::string label = js.value("model", "sigma") + "-" + std::to_string(idx++);
        c.stage = "roundtrip " + label;
        const SigmaSpec sigma = sigma_from_json(js, "sigmas[" + label + "]");
        KernelSpec h = make_kernel({TabulatedKernel{[&sigma](double t) {
            return cxd(laplace_forward(sigma, t), 0.0);
        }}});
        const auto via_laguerre = laguerre_project(h, j_max);
        const auto via_moments = moments_from_eta(sigma, j_max);
        CsvTable t;
        t.header = {"j", "laguerre", "moments"};
        t.columns = {{}, {}, {}};
        double worst = 0.0;
        for (long j = 0; j <= j_max; ++j) {
            t.columns[0].push_back(static_cast<double>(j));
            t.columns[1].push_back(via_laguerre[j]);
            t.columns[2].push_back(via_moments[j]);
            worst = std::max(worst, std::abs(via_laguerre[j] - via_moments[j]));
        }
        write_csv(c.artifact("roundtrip_" + label + ".csv"), t);
        c.check("laguerre(laplace) = moments for " + label + " (abs " + fmtg(tol) + ")",
                worst <= tol, "max abs diff " + fmtg(worst));
    }
}

void run_matvec_performance(Ctx& c)
{
    c.stage = "build";
    const auto n_perf = scaled_pow2(c.cfg.value("N_perf", 65536u), c.options.refine);
    const auto n_check = c.cfg.value("N_check", 256u);
    const double speedup_gate = c.cfg["gates"].value("speedup", 50.0);
    const double tol = c.cfg["gates"].value("tol", 1e-12);

    auto make_g = [](std::size_t n) {
        std::vector<cxd> g(2 * n - 1);
        for (std::size_t j = 0; j < g.size(); ++j)
            g[j] = 1.0 / (static_cast<double>(j) + 1.0);
        return g;
    };

    c.stage = "accuracy";
    {
        const auto g = make_g(n_check);
        const HankelMatrix H(g, n_check);
        std::mt19937 rng(solver_seed(c));
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        std::vector<cxd> u(n_check), yf(n_check), yn(n_check);
        for (auto& v : u) v = cxd(dist(rng), dist(rng));
        H.matvec(u, yf);
        H.matvec_naive(u, yn);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < n_check; ++i) {
            num += std::norm(yf[i] - yn[i]);
            den += std::norm(yn[i]);
        }
        const double rel = std::sqrt(num / den);
        c.check("fft matvec matches naive at N=" + std::to_string(n_check), rel <= tol,
                "rel error " + fmtg(rel));
    }

    c.stage = "timing";
    {
        const auto g = make_g(n_perf);
        const HankelMatrix H(g, n_perf);
        std::vector<cxd> u(n_perf, cxd(1.0, 0.0)), y(n_perf);
        using clock = std::chrono::steady_clock;

        double fft_best = 1e300;
        for (int rep = 0; rep < 5; ++rep) {
            const auto t0 = clock::now();
            H.matvec(u, y);
            fft_best = std::min(fft_best, std::chrono::duration<double>(clock::now() - t0).count());
        }
        const auto t0 = clock::now();
        H.matvec_naive(u, y);
        const double naive_time = std::chrono::duration<double>(clock::now() - t0).count();
        const double ratio = naive_time / fft_best;

        CsvTable t;
        t.header = {"N", "naive_seconds", "fft_seconds", "speedup"};
        t.columns = {{static_cast<double>(n_perf)}, {naive_time}, {fft_best}, {ratio}};
        write_csv(c.artifact("perf.csv"), t);
        c.check("fft beats naive by >= " + fmtg(speedup_gate) + "x at N=" + std::to_string(n_perf),
                ratio >= speedup_gate, "measured " + fmtg(ratio) + "x");
    }
}

}  // namespace

ExperimentReport run_experiment(const json& config, const RunOptions& options)
{
    Ctx c;
    c.cfg = config;
    c.options = options;
    c.report.id = config.value("id", "experiment");
    c.report.kind = config.value("kind", "");
    c.dir = options.out_dir / c.report.id;

    const auto t0 = std::chrono::steady_clock::now();
    try {
        std::filesystem::create_directories(c.dir);
        const std::string kind = c.report.kind;
        if (kind == "weyl-constants") run_weyl_constants(c);
        else if (kind == "compare-representations") run_compare_representations(c);
        else if (kind == "norm-growth") run_norm_growth(c);
        else if (kind == "jump-law") run_jump_law(c);
        else if (kind == "spectrum-law") run_spectrum_law(c);
        else if (kind == "twist") run_twist(c);
        else if (kind == "widom") run_widom(c);
        else if (kind == "localization-symmetry") run_localization_symmetry(c);
        else if (kind == "carleman-grid") run_carleman_grid(c);
        else if (kind == "transform-roundtrip") run_transform_roundtrip(c);
        else if (kind == "matvec-performance") run_matvec_performance(c);
        else throw ConfigError("kind", "unknown experiment kind '" + kind + "'");
        c.report.pass = std::all_of(c.report.checks.begin(), c.report.checks.end(),
                                    [](const CheckResult& r) { return r.pass; });
    } catch (const std::exception& e) {
        c.report.error = true;
        c.report.pass = false;
        c.report.error_stage = c.stage;
        c.report.checks.push_back({"stage '" + c.stage + "'", false, e.what()});
    }
    c.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    // persist the verdict next to the artifacts
    json j;
    j["id"] = c.report.id;
    j["kind"] = c.report.kind;
    j["pass"] = c.report.pass;
    j["seconds"] = c.report.seconds;
    j["checks"] = json::array();
    for (const auto& r : c.report.checks)
        j["checks"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    std::error_code ec;
    std::filesystem::create_directories(c.dir, ec);
    std::ofstream(c.dir / "check.json") << j.dump(2) << "\n";
    return c.report;
}

ExperimentReport run_experiment_file(const fs::path& config_path, const RunOptions& options)
{
    std::ifstream in(config_path);
    if (!in) {
        ExperimentReport r;
        r.id = config_path.string();
        r.error = true;
        r.error_stage = "open";
        r.checks.push_back({"open config", false, "cannot open " + config_path.string()});
        return r;
    }
    json cfg;
    try {
        in >> cfg;
    } catch (const std::exception& e) {
        ExperimentReport r;
        r.id = config_path.string();
        r.error = true;
        r.error_stage = "parse";
        r.checks.push_back({"parse config", false, e.what()});
        return r;
    }
    return run_experiment(cfg, options);
}

std::vector<ExperimentReport> run_suite(const fs::path& manifest_path, const RunOptions& options)
{
    std::vector<ExperimentReport> reports;
    std::ifstream in(manifest_path);
    if (!in) {
        ExperimentReport r;
        r.id = manifest_path.string();
        r.error = true;
        r.error_stage = "open";
        r.checks.push_back({"open manifest", false, "cannot open " + manifest_path.string()});
        reports.push_back(r);
        return reports;
    }
    json manifest;
    try {
        in >> manifest;
    } catch (const std::exception& e) {
        ExperimentReport r;
        r.id = manifest_path.string();
        r.error = true;
        r.error_stage = "parse";
        r.checks.push_back({"parse manifest", false, e.what()});
        reports.push_back(r);
        return reports;
    }
    const fs::path base = manifest_path.parent_path();
    for (const auto& entry : manifest.value("experiments", json::array()))
        reports.push_back(run_experiment_file(base / entry.get<std::string>(), options));
    write_aggregate_report(options.out_dir, reports);
    return reports;
}

int aggregate_status(const std::vector<ExperimentReport>& reports)
{
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

void write_aggregate_report(const fs::path& out_dir, const std::vector<ExperimentReport>& reports)
{
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    std::ofstream md(out_dir / "report.md");
    md << "# Run report\n\n| experiment | kind | result | seconds |\n|---|---|---|---|\n";
    json j = json::array();
    for (const auto& r : reports) {
        md << "| " << r.id << " | " << r.kind << " | " << (r.pass ? "pass" : "FAIL") << " | "
           << fmtg(r.seconds) << " |\n";
        json e;
        e["id"] = r.id;
        e["pass"] = r.pass;
        e["seconds"] = r.seconds;
        e["checks"] = json::array();
        for (const auto& ch : r.checks)
            e["checks"].push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
        j.push_back(e);
    }
    md << "\n";
    for (const auto& r : reports) {
        md << "## " << r.id << "\n\n";
        for (const auto& ch : r.checks)
            md << "- " << (ch.pass ? "[pass] " : "[FAIL] ") << ch.name
               << (ch.detail.empty() ? "" : " — " + ch.detail) << "\n";
        md << "\n";
    }
    std::ofstream(out_dir / "report.json") << j.dump(2) << "\n";
}

}  // namespace hankel
