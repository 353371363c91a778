#pragma once

// Scenario configuration shared by the CLI subcommands. Stored as a flat JSON
// object; keys are the field names below.

#include <optional>
#include <string>

#include "json.hpp"

#include "nearfield/geometry.hpp"

namespace nearfield {

enum class ArrayKind { spd_upa, spd_ula, cap };

/// "spd-upa" / "spd_upa" etc. Throws ValidationError on anything else.
ArrayKind parse_array_kind(const std::string& text);
std::string to_string(ArrayKind kind);

struct ScenarioConfig {
    double r = 5.0;
    double theta = kPi / 6.0;
    double phi = kPi / 3.0;
    double d = 0.0628;
    double lambda = 2.0 * 0.0628;
    double element_area = (2.0 * 0.0628) * (2.0 * 0.0628) / (4.0 * kPi);
    double radiation_factor = 1.0;
    ArrayKind array = ArrayKind::spd_upa;
    long m_x = 25;
    long m_z = 25;
    double l_x = 25 * 0.0628;
    double l_z = 25 * 0.0628;

    UserPosition user() const { return {r, theta, phi}; }
    Medium medium() const { return Medium(lambda, radiation_factor); }
    /// For spd_ula, m_z is forced to 1.
    SpdArray spd_array() const;
    CapAperture cap_aperture() const { return {l_x, l_z}; }

    /// Builds every geometry object once so that invalid values are reported early.
    void validate() const;
};

nlohmann::json to_json(const ScenarioConfig& config);

/// Missing keys keep their defaults; unknown keys or wrong types raise ValidationError.
ScenarioConfig config_from_json(const nlohmann::json& j, ScenarioConfig base = {});

ScenarioConfig load_config(const std::string& path);

}  // namespace nearfield
