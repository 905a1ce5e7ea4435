#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hankel/funcspace.hpp"
#include "hankel/quadrature.hpp"

namespace hankel {

/// Raised when a config does not validate; `field` names the offending entry.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error("config field '" + field + "': " + what), field_(std::move(field))
    {
    }
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// {"terms": [{"type": "log_power"|"oscillatory"|"jump"|"carleman_poly"|"tabulated", ...}]}
KernelSpec kernel_from_json(const nlohmann::json& j, const std::string& where = "kernel");

/// {"terms": [{"type": "log_power"|"power"|"tabulated", ...}]}
SequenceSpec sequence_from_json(const nlohmann::json& j, const std::string& where = "sequence");

/// {"model": "constant"|"indicator_eta"|"sigma_star"|"eta_star", ...params}
SigmaSpec sigma_from_json(const nlohmann::json& j, const std::string& where = "sigma");

QuadratureConfig quadrature_from_json(const nlohmann::json& j,
                                      const std::string& where = "quadrature");

}  // namespace hankel
