#include "hankel/config.hpp"

namespace hankel {

using nlohmann::json;

namespace {

double need_number(const json& j, const std::string& key, const std::string& where)
{
    if (!j.contains(key)) throw ConfigError(where + "." + key, "missing");
    if (!j[key].is_number()) throw ConfigError(where + "." + key, "expected a number");
    return j[key].get<double>();
}

double opt_number(const json& j, const std::string& key, double fallback)
{
    return j.contains(key) ? j[key].get<double>() : fallback;
}

cxd complex_entry(const json& j, const std::string& key, const std::string& where)
{
    if (!j.contains(key)) throw ConfigError(where + "." + key, "missing");
    const auto& v = j[key];
    if (v.is_number()) return cxd(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return cxd(v[0].get<double>(), v[1].get<double>());
    throw ConfigError(where + "." + key, "expected a number or [re, im]");
}

}  // namespace

KernelSpec kernel_from_json(const json& j, const std::string& where)
{
    if (!j.contains("terms") || !j["terms"].is_array())
        throw ConfigError(where + ".terms", "expected an array of kernel terms");
    std::vector<KernelTerm> terms;
    std::size_t idx = 0;
    for (const auto& t : j["terms"]) {
        const std::string here = where + ".terms[" + std::to_string(idx++) + "]";
        if (!t.contains("type")) throw ConfigError(here + ".type", "missing");
        const std::string type = t["type"].get<std::string>();
        try {
            if (type == "log_power") {
                LogPowerKernel k;
                k.kappa = need_number(t, "kappa", here);
                k.alpha = need_number(t, "alpha", here);
                const std::string ep = t.value("endpoint", "zero");
                if (ep != "zero" && ep != "infinity")
                    throw ConfigError(here + ".endpoint", "expected 'zero' or 'infinity'");
                k.at_zero = (ep == "zero");
                terms.emplace_back(k);
            } else if (type == "oscillatory") {
                OscillatoryKernel k;
                k.kappa = complex_entry(t, "kappa", here);
                k.alpha = need_number(t, "alpha", here);
                k.rho = need_number(t, "rho", here);
                terms.emplace_back(k);
            } else if (type == "jump") {
                JumpKernel k;
                k.h0 = need_number(t, "h0", here);
                k.l = static_cast<int>(opt_number(t, "l", 0));
                k.t0 = need_number(t, "t0", here);
                terms.emplace_back(k);
            } else if (type == "carleman_poly") {
                CarlemanPolyKernel k;
                if (!t.contains("p") || !t["p"].is_array())
                    throw ConfigError(here + ".p", "expected coefficient array");
                k.p = t["p"].get<std::vector<double>>();
                terms.emplace_back(k);
            } else {
                throw ConfigError(here + ".type", "unknown kernel term type '" + type + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw ConfigError(here, e.what());
        }
    }
    try {
        return make_kernel(std::move(terms));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where, e.what());
    }
}

SequenceSpec sequence_from_json(const json& j, const std::string& where)
{
    if (!j.contains("terms") || !j["terms"].is_array())
        throw ConfigError(where + ".terms", "expected an array of sequence terms");
    std::vector<SequenceTerm> terms;
    std::size_t idx = 0;
    for (const auto& t : j["terms"]) {
        const std::string here = where + ".terms[" + std::to_string(idx++) + "]";
        if (!t.contains("type")) throw ConfigError(here + ".type", "missing");
        const std::string type = t["type"].get<std::string>();
        try {
            if (type == "log_power") {
                LogPowerSeq s;
                s.kappa = complex_entry(t, "kappa", here);
                s.alpha = need_number(t, "alpha", here);
                s.zeta = t.contains("zeta") ? complex_entry(t, "zeta", here) : cxd(1.0, 0.0);
                terms.emplace_back(s);
            } else if (type == "power") {
                PowerSeq s;
                s.gamma = need_number(t, "gamma", here);
                terms.emplace_back(s);
            } else if (type == "tabulated") {
                TabulatedSeq s;
                if (!t.contains("values") || !t["values"].is_array())
                    throw ConfigError(here + ".values", "expected value array");
                for (const auto& v : t["values"]) s.values.emplace_back(v.get<double>(), 0.0);
                terms.emplace_back(s);
            } else {
                throw ConfigError(here + ".type", "unknown sequence term type '" + type + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw ConfigError(here, e.what());
        }
    }
    try {
        return make_sequence(std::move(terms));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where, e.what());
    }
}

SigmaSpec sigma_from_json(const json& j, const std::string& where)
{
    if (!j.contains("model")) throw ConfigError(where + ".model", "missing");
    const std::string model = j["model"].get<std::string>();
    try {
        if (model == "constant") return constant_sigma(need_number(j, "value", where));
        if (model == "indicator_eta") return indicator_eta();
        if (model == "sigma_star")
            return model_sigma_star(need_number(j, "alpha", where), need_number(j, "kappa0", where),
                                    need_number(j, "kappa_inf", where));
        if (model == "eta_star")
            return model_eta_star(need_number(j, "alpha", where), need_number(j, "kappa1", where),
                                  need_number(j, "kappa_m1", where));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where, e.what());
    }
    throw ConfigError(where + ".model", "unknown sigma model '" + model + "'");
}

QuadratureConfig quadrature_from_json(const json& j, const std::string& where)
{
    QuadratureConfig q;
    q.nodes_per_panel = static_cast<int>(opt_number(j, "nodes_per_panel", q.nodes_per_panel));
    q.grading_levels = static_cast<int>(opt_number(j, "grading_levels", q.grading_levels));
    q.max_panels = static_cast<int>(opt_number(j, "max_panels", q.max_panels));
    q.rel_tol = opt_number(j, "rel_tol", q.rel_tol);
    q.abs_tol = opt_number(j, "abs_tol", q.abs_tol);
    if (q.nodes_per_panel < 2) throw ConfigError(where + ".nodes_per_panel", "must be >= 2");
    if (!(q.rel_tol > 0.0)) throw ConfigError(where + ".rel_tol", "must be > 0");
    return q;
}

}  // namespace hankel
