#include "nearfield/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace nearfield {

ArrayKind parse_array_kind(const std::string& text) {
    std::string t = text;
    std::replace(t.begin(), t.end(), '-', '_');
    if (t == "spd_upa") {
        return ArrayKind::spd_upa;
    }
    if (t == "spd_ula") {
        return ArrayKind::spd_ula;
    }
    if (t == "cap") {
        return ArrayKind::cap;
    }
    throw ValidationError("array kind must be one of spd-upa, spd-ula, cap; got '" + text + "'");
}

std::string to_string(ArrayKind kind) {
    switch (kind) {
        case ArrayKind::spd_upa:
            return "spd_upa";
        case ArrayKind::spd_ula:
            return "spd_ula";
        case ArrayKind::cap:
            return "cap";
    }
    return "spd_upa";
}

SpdArray ScenarioConfig::spd_array() const {
    return {m_x, array == ArrayKind::spd_ula ? 1L : m_z, d, element_area};
}

void ScenarioConfig::validate() const {
    (void)user();
    (void)medium();
    if (array == ArrayKind::cap) {
        (void)cap_aperture();
    } else {
        (void)spd_array();
    }
}

nlohmann::json to_json(const ScenarioConfig& c) {
    return {
        {"r", c.r},
        {"theta", c.theta},
        {"phi", c.phi},
        {"d", c.d},
        {"lambda", c.lambda},
        {"element_area", c.element_area},
        {"radiation_factor", c.radiation_factor},
        {"array", to_string(c.array)},
        {"m_x", c.m_x},
        {"m_z", c.m_z},
        {"l_x", c.l_x},
        {"l_z", c.l_z},
    };
}

namespace {

double number(const nlohmann::json& j, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number()) {
        throw ValidationError(std::string("config key '") + key + "' must be a number");
    }
    return v.get<double>();
}

long integer(const nlohmann::json& j, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number_integer()) {
        throw ValidationError(std::string("config key '") + key + "' must be an integer");
    }
    return v.get<long>();
}

}  // namespace

ScenarioConfig config_from_json(const nlohmann::json& j, ScenarioConfig c) {
    if (!j.is_object()) {
        throw ValidationError("config must be a JSON object");
    }
    static const std::set<std::string> known{"r",  "theta", "phi", "d",   "lambda", "element_area",
                                             "radiation_factor", "array", "m_x", "m_z", "l_x", "l_z"};
    for (const auto& item : j.items()) {
        if (!known.contains(item.key())) {
            throw ValidationError("unknown config key '" + item.key() + "'");
        }
    }
    auto set = [&](const char* key, double& field) {
        if (j.contains(key)) {
            field = number(j, key);
        }
    };
    set("r", c.r);
    set("theta", c.theta);
    set("phi", c.phi);
    set("d", c.d);
    set("lambda", c.lambda);
    set("element_area", c.element_area);
    set("radiation_factor", c.radiation_factor);
    set("l_x", c.l_x);
    set("l_z", c.l_z);
    if (j.contains("m_x")) {
        c.m_x = integer(j, "m_x");
    }
    if (j.contains("m_z")) {
        c.m_z = integer(j, "m_z");
    }
    if (j.contains("array")) {
        if (!j.at("array").is_string()) {
            throw ValidationError("config key 'array' must be a string");
        }
        c.array = parse_array_kind(j.at("array").get<std::string>());
    }
    return c;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open config file '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

}  // namespace nearfield
