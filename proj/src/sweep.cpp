#include "nearfield/sweep.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "nearfield/closed_forms.hpp"
#include "nearfield/gain_quadrature.hpp"

namespace nearfield {

double ratio_db(double gain_eva, double gain_rad) { return 10.0 * std::log10(gain_eva / gain_rad); }

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return {buf, res.ptr};
}

std::string csv_header() {
    return "var_name,var_value,gain_eva,gain_rad,gain_far,limit_eva,limit_rad,ratio_db\n";
}

std::string csv_row(const SweepRecord& r) {
    std::string row = r.var_name;
    for (double v : {r.var_value, r.gain_eva, r.gain_rad, r.gain_far, r.limit_eva, r.limit_rad, r.ratio_db}) {
        row += ',';
        row += format_number(v);
    }
    row += '\n';
    return row;
}

std::string to_csv(const std::vector<SweepRecord>& records) {
    std::string out = csv_header();
    for (const auto& r : records) {
        out += csv_row(r);
    }
    return out;
}

namespace {

bool parse_number(std::string_view field, double& out) {
    const auto res = std::from_chars(field.data(), field.data() + field.size(), out);
    return res.ec == std::errc() && res.ptr == field.data() + field.size();
}

CsvCheck fail(long line, const std::string& why) {
    return {false, line, "line " + std::to_string(line) + ": " + why};
}

}  // namespace

CsvCheck validate_csv(std::string_view text) {
    const std::string header = csv_header();
    if (text.substr(0, header.size()) != header) {
        return fail(1, "header mismatch");
    }
    if (text.find('\r') != std::string_view::npos) {
        return fail(0, "carriage return found; lines must end in '\\n'");
    }
    if (text.back() != '\n') {
        return fail(0, "missing trailing newline");
    }
    CsvCheck check;
    std::size_t pos = header.size();
    long line = 1;
    while (pos < text.size()) {
        ++line;
        const std::size_t end = text.find('\n', pos);
        const std::string_view row = text.substr(pos, end - pos);
        pos = end + 1;

        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = row.find(',', start);
            fields.push_back(row.substr(start, comma - start));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (fields.size() != 8) {
            return fail(line, "expected 8 fields, found " + std::to_string(fields.size()));
        }
        if (fields[0].empty()) {
            return fail(line, "empty var_name");
        }
        double v[7];
        for (std::size_t i = 0; i < 7; ++i) {
            if (!parse_number(fields[i + 1], v[i]) || !std::isfinite(v[i])) {
                return fail(line, "field " + std::to_string(i + 2) + " is not a finite number");
            }
        }
        for (std::size_t i = 1; i <= 5; ++i) {
            if (v[i] < 0.0) {
                return fail(line, "negative gain");
            }
        }
        if (std::abs(ratio_db(v[1], v[2]) - v[6]) > 1e-9) {
            return fail(line, "ratio_db inconsistent with gain_eva / gain_rad");
        }
        ++check.rows;
    }
    return check;
}

std::vector<double> spaced(double lo, double hi, int steps, bool log_spacing) {
    if (steps < 1 || !(lo > 0.0) || !(hi >= lo)) {
        throw ValidationError("sweep range must satisfy 0 < from <= to with at least one step");
    }
    std::vector<double> out;
    if (steps == 1) {
        out.push_back(lo);
        return out;
    }
    for (int i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / (steps - 1);
        out.push_back(log_spacing ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
    }
    out.back() = hi;
    return out;
}

namespace {

long nearest_odd(double v) {
    const long n = std::max(1L, std::lround(v));
    return n % 2 == 1 ? n : (static_cast<double>(n) < v ? n + 1 : n - 1);
}

}  // namespace

std::vector<long> spaced_odd(long lo, long hi, int steps, bool log_spacing) {
    std::vector<long> out;
    for (double v : spaced(static_cast<double>(lo), static_cast<double>(hi), steps, log_spacing)) {
        long m = std::clamp(nearest_odd(v), lo % 2 == 1 ? lo : lo + 1, hi % 2 == 1 ? hi : hi - 1);
        if (out.empty() || m > out.back()) {
            out.push_back(m);
        }
    }
    return out;
}

namespace {

double cap_far_field(const ScenarioConfig& config, double area) {
    return config.radiation_factor * config.user().cosines().big_psi() * area /
           (4.0 * kPi * config.r * config.r);
}

SweepRecord make_record(std::string name, double value, const GainBreakdown& g, double limit_eva,
                        double limit_rad) {
    return {std::move(name), value, g.with_reactive, g.radiating_only, g.far_field,
            limit_eva,       limit_rad, ratio_db(g.with_reactive, g.radiating_only)};
}

struct Limits {
    double eva;
    double rad;
};

Limits spd_limits(const ScenarioConfig& config) {
    const auto user = config.user();
    const auto medium = config.medium();
    if (config.array == ArrayKind::spd_ula) {
        return {ula_asymptotic(user, medium, config.d, config.element_area, true).value,
                ula_asymptotic(user, medium, config.d, config.element_area, false).value};
    }
    const double mu = config.spd_array().occupation_ratio();
    return {upa_asymptotic(user, medium, mu, true).value, upa_asymptotic(user, medium, mu, false).value};
}

GainBreakdown cap_breakdown(const ScenarioConfig& config, const QuadratureSpec& spec, bool& converged,
                            double* error_estimate = nullptr) {
    const auto user = config.user();
    const auto medium = config.medium();
    const auto aperture = config.cap_aperture();
    const QuadratureResult eva = cap_gain_integral(aperture, user, medium, spec, true);
    const QuadratureResult rad = cap_gain_integral(aperture, user, medium, spec, false);
    converged = converged && eva.converged && rad.converged;
    if (error_estimate != nullptr) {
        *error_estimate = eva.error_estimate;
    }
    GainBreakdown g;
    g.with_reactive = eva.value;
    g.radiating_only = rad.value;
    g.far_field = cap_far_field(config, aperture.area());
    g.ratio_eva_over_rad = g.with_reactive / g.radiating_only;
    return g;
}

}  // namespace

GainReport evaluate_gain(const ScenarioConfig& config, const QuadratureSpec& spec) {
    config.validate();
    GainReport report;
    report.kind = config.array;
    if (config.array == ArrayKind::cap) {
        report.gains = cap_breakdown(config, spec, report.converged, &report.error_estimate);
        const auto user = config.user();
        const auto medium = config.medium();
        report.limit_eva = cap_asymptotic(user, medium, true).value;
        report.limit_rad = cap_asymptotic(user, medium, false).value;
        return report;
    }
    const SpdArray array = config.spd_array();
    const UserPosition user = config.user();
    report.gains = gain_breakdown(array, user, config.medium());
    const Limits limits = spd_limits(config);
    report.limit_eva = limits.eva;
    report.limit_rad = limits.rad;
    const Region region = spd_region(array, user);
    report.epsilon = region.epsilon;
    report.coarse_grid = region.coarse;
    return report;
}

SweepResult sweep_elements(const ScenarioConfig& config, long lo, long hi, int steps, bool log_spacing) {
    if (config.array == ArrayKind::cap) {
        throw ValidationError("an elements sweep needs an SPD array (spd-upa or spd-ula)");
    }
    config.validate();
    const Limits limits = spd_limits(config);
    SweepResult result;
    for (long m : spaced_odd(lo, hi, steps, log_spacing)) {
        ScenarioConfig c = config;
        c.m_x = m;
        c.m_z = config.array == ArrayKind::spd_ula ? 1 : m;
        const SpdArray array = c.spd_array();
        const GainBreakdown g = gain_breakdown(array, c.user(), c.medium());
        result.records.push_back(make_record("elements", static_cast<double>(array.element_count()), g,
                                             limits.eva, limits.rad));
    }
    return result;
}

SweepResult sweep_aperture(const ScenarioConfig& config, double lo, double hi, int steps, bool log_spacing,
                           const QuadratureSpec& spec) {
    if (config.array == ArrayKind::spd_ula) {
        throw ValidationError("an aperture sweep needs a planar array (spd-upa or cap)");
    }
    config.validate();
    SweepResult result;
    const auto user = config.user();
    const auto medium = config.medium();
    if (config.array == ArrayKind::cap) {
        const double limit_eva = cap_asymptotic(user, medium, true).value;
        const double limit_rad = cap_asymptotic(user, medium, false).value;
        for (double area : spaced(lo, hi, steps, log_spacing)) {
            ScenarioConfig c = config;
            c.l_x = c.l_z = std::sqrt(area);
            const GainBreakdown g = cap_breakdown(c, spec, result.converged);
            result.records.push_back(make_record("aperture", area, g, limit_eva, limit_rad));
        }
        return result;
    }
    const Limits limits = spd_limits(config);
    long previous = 0;
    for (double area : spaced(lo, hi, steps, log_spacing)) {
        const long m = nearest_odd(std::sqrt(area) / config.d);
        if (m == previous) {
            continue;
        }
        previous = m;
        ScenarioConfig c = config;
        c.m_x = c.m_z = m;
        const SpdArray array = c.spd_array();
        const double side = array.length_x();
        result.records.push_back(
            make_record("aperture", side * side, gain_breakdown(array, user, medium), limits.eva, limits.rad));
    }
    return result;
}

SweepResult ratio_series(const ScenarioConfig& config, double lo, double hi, int steps,
                         const std::vector<double>& distances, bool log_spacing, const QuadratureSpec& spec) {
    if (distances.empty()) {
        throw ValidationError("ratio sweep needs at least one distance");
    }
    SweepResult result;
    const auto areas = spaced(lo, hi, steps, log_spacing);
    for (double r : distances) {
        ScenarioConfig c = config;
        c.array = ArrayKind::cap;
        c.r = r;
        c.validate();
        const auto user = c.user();
        const auto medium = c.medium();
        const double limit_eva = cap_asymptotic(user, medium, true).value;
        const double limit_rad = cap_asymptotic(user, medium, false).value;
        const std::string name = "aperture@r=" + format_number(r);
        for (double area : areas) {
            c.l_x = c.l_z = std::sqrt(area);
            const GainBreakdown g = cap_breakdown(c, spec, result.converged);
            result.records.push_back(make_record(name, area, g, limit_eva, limit_rad));
        }
    }
    return result;
}

}  // namespace nearfield
