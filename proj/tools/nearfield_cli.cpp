// nearfield: channel gain of discrete and continuous-aperture arrays with the
// reactive field terms included.
//
//   nearfield gain    [scenario flags]
//   nearfield sweep   --var elements|aperture --from A --to B --steps N
//   nearfield ratio   --from A --to B --steps N --distances 1,5,25
//   nearfield limits  [scenario flags]
//   nearfield verify  [--perturb-order n]
//
// Exit codes: 0 success, 1 validation error, 2 verification failure,
// 3 quadrature did not converge.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nearfield/closed_forms.hpp"
#include "nearfield/config.hpp"
#include "nearfield/field_kernels.hpp"
#include "nearfield/sweep.hpp"
#include "nearfield/verify.hpp"

namespace {

using namespace nearfield;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;
constexpr int kExitUnconverged = 3;

struct Overrides {
    std::string config_path;
    std::optional<std::string> array;
    std::optional<long> m_x, m_z;
    std::optional<double> l_x, l_z, r, theta, phi, d, lambda, area, factor;
    bool no_reactive = false;
    std::string out;
    double tol = 1e-9;
    long max_panels = 1L << 20;
};

ScenarioConfig resolve(const Overrides& o) {
    ScenarioConfig c = o.config_path.empty() ? ScenarioConfig{} : load_config(o.config_path);
    auto apply = [](auto& field, const auto& value) {
        if (value) {
            field = *value;
        }
    };
    if (o.array) {
        c.array = parse_array_kind(*o.array);
    }
    apply(c.m_x, o.m_x);
    apply(c.m_z, o.m_z);
    apply(c.l_x, o.l_x);
    apply(c.l_z, o.l_z);
    apply(c.r, o.r);
    apply(c.theta, o.theta);
    apply(c.phi, o.phi);
    apply(c.d, o.d);
    apply(c.lambda, o.lambda);
    apply(c.element_area, o.area);
    apply(c.radiation_factor, o.factor);
    c.validate();
    return c;
}

QuadratureSpec quadrature_spec(const Overrides& o) {
    QuadratureSpec spec;
    spec.rel_tol = o.tol;
    spec.max_panels = o.max_panels;
    spec.validate();
    return spec;
}

// Validates, then writes to --out or stdout.
int emit_csv(const std::vector<SweepRecord>& records, const std::string& out_path) {
    const std::string text = to_csv(records);
    const CsvCheck check = validate_csv(text);
    if (!check.ok) {
        std::cerr << "error: emitted CSV failed validation: " << check.message << "\n";
        return kExitVerification;
    }
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kExitValidation;
    }
    out << text;
    return kExitOk;
}

void row(const std::string& name, const std::string& value) {
    std::printf("%-22s %s\n", name.c_str(), value.c_str());
}

void row(const std::string& name, double value) { row(name, format_number(value)); }

int cmd_gain(const Overrides& o) {
    const ScenarioConfig c = resolve(o);
    const GainReport g = evaluate_gain(c, quadrature_spec(o));
    const double headline = o.no_reactive ? g.gains.radiating_only : g.gains.with_reactive;

    row("array", to_string(g.kind));
    if (g.kind == ArrayKind::cap) {
        row("aperture_m", format_number(c.l_x) + " x " + format_number(c.l_z));
        row("quadrature_error", g.error_estimate);
    } else {
        const SpdArray a = c.spd_array();
        row("elements", std::to_string(a.m_x()) + " x " + std::to_string(a.m_z()));
        row("epsilon", g.epsilon);
        row("occupation_ratio", a.occupation_ratio());
    }
    row("gain", headline);
    row("gain_eva", g.gains.with_reactive);
    row("gain_rad", g.gains.radiating_only);
    row("gain_far", g.gains.far_field);
    row("ratio_eva_over_rad", g.gains.ratio_eva_over_rad);
    row("ratio_db", ratio_db(g.gains.with_reactive, g.gains.radiating_only));
    row("limit_eva", g.limit_eva);
    row("limit_rad", g.limit_rad);
    if (g.coarse_grid) {
        std::cerr << "warning: epsilon = d/r exceeds 0.1; the integral form is a poor proxy for the sum\n";
    }

    if (!o.out.empty()) {
        const bool cap = g.kind == ArrayKind::cap;
        const double var = cap ? c.l_x * c.l_z : static_cast<double>(c.spd_array().element_count());
        SweepRecord rec{cap ? "aperture" : "elements", var, g.gains.with_reactive, g.gains.radiating_only,
                        g.gains.far_field, g.limit_eva, g.limit_rad,
                        ratio_db(g.gains.with_reactive, g.gains.radiating_only)};
        if (const int rc = emit_csv({rec}, o.out); rc != kExitOk) {
            return rc;
        }
    }
    if (!g.converged) {
        std::cerr << "error: quadrature did not reach the requested tolerance\n";
        return kExitUnconverged;
    }
    return kExitOk;
}

int cmd_sweep(const Overrides& o, const std::string& var, double from, double to, int steps, bool linear) {
    const ScenarioConfig c = resolve(o);
    SweepResult result;
    if (var == "elements") {
        result = sweep_elements(c, std::lround(from), std::lround(to), steps, !linear);
    } else {
        result = sweep_aperture(c, from, to, steps, !linear, quadrature_spec(o));
    }
    if (const int rc = emit_csv(result.records, o.out); rc != kExitOk) {
        return rc;
    }
    if (!result.converged) {
        std::cerr << "error: at least one quadrature did not reach the requested tolerance\n";
        return kExitUnconverged;
    }
    return kExitOk;
}

int cmd_ratio(const Overrides& o, double from, double to, int steps, const std::vector<double>& distances,
              bool linear) {
    const ScenarioConfig c = resolve(o);
    const SweepResult result = ratio_series(c, from, to, steps, distances, !linear, quadrature_spec(o));
    if (const int rc = emit_csv(result.records, o.out); rc != kExitOk) {
        return rc;
    }
    if (!result.converged) {
        std::cerr << "error: at least one quadrature did not reach the requested tolerance\n";
        return kExitUnconverged;
    }
    return kExitOk;
}

int cmd_limits(const Overrides& o) {
    const ScenarioConfig c = resolve(o);
    const UserPosition user = c.user();
    const Medium medium = c.medium();
    const double mu = c.element_area / (c.d * c.d);
    if (!(mu > 0.0 && mu <= 1.0)) {
        throw ValidationError("occupation ratio A/d^2 must lie in (0, 1]");
    }
    const bool eva = !o.no_reactive;
    row("r_psi_m", c.r * user.cosines().big_psi());
    row("r_a_phi_m", c.r * std::sqrt(user.cosines().a_phi_sq()));
    row("occupation_ratio", mu);
    row("upa_limit", upa_asymptotic(user, medium, mu, eva).value);
    row("upa_eva", upa_asymptotic(user, medium, mu, true).value);
    row("upa_rad", upa_asymptotic(user, medium, mu, false).value);
    row("ratio_spd", ratio_spd(user, medium));
    row("ratio_spd_threshold_m", ratio_spd_threshold(c.lambda));
    row("ula_eva", ula_asymptotic(user, medium, c.d, c.element_area, true).value);
    row("ula_rad", ula_asymptotic(user, medium, c.d, c.element_area, false).value);
    row("ula_ratio", ula_ratio(medium.wavenumber() * c.r * std::sqrt(user.cosines().a_phi_sq())));
    row("cap_eva", cap_asymptotic(user, medium, true).value);
    row("cap_rad", cap_asymptotic(user, medium, false).value);
    return kExitOk;
}

int cmd_verify(double tol, std::optional<int> perturb_order, double perturb_amount, const std::string& out) {
    VerifyOptions options;
    options.rel_tol = tol;
    if (perturb_order) {
        options.perturb_order = kernel_order(*perturb_order);
    }
    options.perturb_amount = perturb_amount;
    const VerifyReport report = run_verify(options);
    for (const auto& c : report.checks) {
        std::printf("%s %-34s measured=%s tol=%s %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                    format_number(c.measured).c_str(), format_number(c.tolerance).c_str(), c.detail.c_str());
    }
    const std::string summary = to_json(report).dump();
    if (out.empty()) {
        std::cout << summary << "\n";
    } else {
        std::ofstream(out) << summary << "\n";
    }
    return report.all_passed() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Near-field channel gain with reactive field terms"};
    app.require_subcommand(0, 1);

    Overrides o;
    bool print_defaults = false;
    app.add_flag("--defaults", print_defaults, "Print the default scenario as JSON and exit");
    app.add_option("--config", o.config_path, "Scenario JSON file")->check(CLI::ExistingFile);
    app.add_option("--array", o.array, "spd-upa, spd-ula or cap");
    app.add_option("--mx", o.m_x, "Elements along x (odd)");
    app.add_option("--mz", o.m_z, "Elements along z (odd)");
    app.add_option("--lx", o.l_x, "CAP length along x [m]");
    app.add_option("--lz", o.l_z, "CAP length along z [m]");
    app.add_option("--r", o.r, "User distance [m]");
    app.add_option("--theta", o.theta, "Elevation angle [rad]");
    app.add_option("--phi", o.phi, "Azimuth angle [rad]");
    app.add_option("--d", o.d, "Element spacing [m]");
    app.add_option("--lambda", o.lambda, "Wavelength [m]");
    app.add_option("--area", o.area, "Element area [m^2]");
    app.add_option("--factor", o.factor, "eta / (8 R_rad)");
    app.add_flag("--no-reactive", o.no_reactive, "Report the radiating-only gain as the headline value");
    app.add_option("--out", o.out, "Write CSV (or the verify summary) to this path");
    app.add_option("--tol", o.tol, "Quadrature relative tolerance");
    app.add_option("--max-panels", o.max_panels, "Quadrature panel budget per integral");

    auto* gain = app.add_subcommand("gain", "Evaluate one configuration");
    auto* limits = app.add_subcommand("limits", "Print the large-aperture limits and ratios");

    auto* sweep = app.add_subcommand("sweep", "Sweep element count or aperture area, CSV output");
    std::string var = "elements";
    double from = 5;
    double to = 2001;
    int steps = 20;
    bool linear = false;
    sweep->add_option("--var", var, "elements or aperture")->check(CLI::IsMember({"elements", "aperture"}));
    sweep->add_option("--from", from, "Start (side element count or aperture area in m^2)");
    sweep->add_option("--to", to, "End");
    sweep->add_option("--steps", steps, "Number of points");
    sweep->add_flag("--linear", linear, "Evenly spaced instead of logarithmic");

    auto* ratio = app.add_subcommand("ratio", "Gain ratio with/without reactive terms vs aperture, CSV output");
    double ratio_from = 0.01;
    double ratio_to = 100.0;
    int ratio_steps = 20;
    bool ratio_linear = false;
    std::vector<double> distances{1.0, 5.0, 25.0};
    ratio->add_option("--from", ratio_from, "Smallest aperture area [m^2]");
    ratio->add_option("--to", ratio_to, "Largest aperture area [m^2]");
    ratio->add_option("--steps", ratio_steps, "Number of apertures per distance");
    ratio->add_option("--distances", distances, "Distances r [m]")->delimiter(',');
    ratio->add_flag("--linear", ratio_linear, "Evenly spaced instead of logarithmic");

    auto* verify = app.add_subcommand("verify", "Run the self-check suite");
    std::optional<int> perturb_order;
    double perturb_amount = 1e-3;
    double verify_tol = 1e-11;
    verify->add_option("--perturb-order", perturb_order, "Scale kernel order n (3, 5, 7) to inject a fault");
    verify->add_option("--perturb-amount", perturb_amount, "Relative size of the injected fault");
    verify->add_option("--verify-tol", verify_tol, "Quadrature tolerance for the gain integrals");

    for (auto* sub : {gain, limits, sweep, ratio, verify}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (print_defaults) {
            std::cout << to_json(ScenarioConfig{}).dump(2) << "\n";
            return kExitOk;
        }
        if (gain->parsed()) {
            return cmd_gain(o);
        }
        if (limits->parsed()) {
            return cmd_limits(o);
        }
        if (sweep->parsed()) {
            return cmd_sweep(o, var, from, to, steps, linear);
        }
        if (ratio->parsed()) {
            return cmd_ratio(o, ratio_from, ratio_to, ratio_steps, distances, ratio_linear);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_tol, perturb_order, perturb_amount, o.out);
        }
        std::cout << app.help();
        return kExitOk;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
