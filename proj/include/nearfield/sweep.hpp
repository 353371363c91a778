#pragma once

// Parameter sweeps and their CSV form.
//
// CSV layout (one schema for every sweep):
//
//     var_name,var_value,gain_eva,gain_rad,gain_far,limit_eva,limit_rad,ratio_db
//
// Numbers use 17 significant digits, '.' as decimal separator and '\n' line
// endings, so output is byte-identical for identical inputs.

#include <string>
#include <string_view>
#include <vector>

#include "nearfield/config.hpp"
#include "nearfield/gain_discrete.hpp"
#include "nearfield/quadrature.hpp"

namespace nearfield {

struct SweepRecord {
    std::string var_name;
    double var_value = 0.0;
    double gain_eva = 0.0;
    double gain_rad = 0.0;
    double gain_far = 0.0;
    double limit_eva = 0.0;
    double limit_rad = 0.0;
    double ratio_db = 0.0;  // 10 log10(gain_eva / gain_rad)
};

struct SweepResult {
    std::vector<SweepRecord> records;
    bool converged = true;  // false if any quadrature hit its panel budget
};

double ratio_db(double gain_eva, double gain_rad);

/// 17 significant digits in general format, independent of the C locale.
std::string format_number(double value);

std::string csv_header();
std::string csv_row(const SweepRecord& record);
std::string to_csv(const std::vector<SweepRecord>& records);

struct CsvCheck {
    bool ok = true;
    long rows = 0;
    std::string message;
};

/// Re-parses emitted CSV and re-checks every row: header, column count, numeric
/// fields, non-negative gains and ratio_db consistency (1e-9 dB).
CsvCheck validate_csv(std::string_view text);

/// `steps` values from lo to hi, geometrically (log) or evenly spaced.
std::vector<double> spaced(double lo, double hi, int steps, bool log_spacing);

/// Odd integers near the spaced values, de-duplicated, ascending.
std::vector<long> spaced_odd(long lo, long hi, int steps, bool log_spacing);

/// All channel-gain views of a single configuration.
struct GainReport {
    ArrayKind kind = ArrayKind::spd_upa;
    GainBreakdown gains;
    double limit_eva = 0.0;
    double limit_rad = 0.0;
    double epsilon = 0.0;         // d / r, SPD only
    bool coarse_grid = false;     // epsilon above the integral-approximation comfort zone
    bool converged = true;
    double error_estimate = 0.0;  // quadrature error of with_reactive (CAP only)
};

/// SPD kinds use the element sum; CAP uses quadrature. Far-field gain for CAP
/// is factor * Psi * L_x L_z / (4 pi r^2), the full-occupation analogue.
GainReport evaluate_gain(const ScenarioConfig& config, const QuadratureSpec& spec = {});

/// Square (or linear, for spd_ula) arrays with side counts spaced over [lo, hi].
/// var_value is the total element count.
SweepResult sweep_elements(const ScenarioConfig& config, long lo, long hi, int steps,
                           bool log_spacing = true);

/// Square apertures with areas spaced over [lo, hi] m^2. For CAP the gain is the
/// aperture integral; for spd_upa the side count is the odd integer nearest L / d
/// and var_value is the realised aperture (M d)^2.
SweepResult sweep_aperture(const ScenarioConfig& config, double lo, double hi, int steps,
                           bool log_spacing = true, const QuadratureSpec& spec = {});

/// CAP ratio (with / without reactive terms) over apertures, one series per
/// distance. var_name is "aperture@r=<distance>".
SweepResult ratio_series(const ScenarioConfig& config, double lo, double hi, int steps,
                         const std::vector<double>& distances, bool log_spacing = true,
                         const QuadratureSpec& spec = {});

}  // namespace nearfield
