#include "nearfield/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "nearfield/asymptotic_oracle.hpp"
#include "nearfield/closed_forms.hpp"
#include "nearfield/config.hpp"
#include "nearfield/gain_discrete.hpp"
#include "nearfield/gain_quadrature.hpp"

namespace nearfield {

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

VerifyCheck make_check(std::string name, double measured, double tolerance, std::string detail = {}) {
    return {std::move(name), measured <= tolerance, measured, tolerance, std::move(detail)};
}

double order_scale(const VerifyOptions& o, KernelOrder n) {
    return o.perturb_order == n ? 1.0 + o.perturb_amount : 1.0;
}

void green_identity(VerifyReport& report) {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> dist(0.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double u = dist(rng);
        const double ref = std::norm(std::complex<double>(1.0 - u * u, u));
        worst = std::max(worst, rel_diff(green_magnitude_sq(u), ref));
    }
    report.checks.push_back(make_check("green_magnitude_identity", worst, 1e-13));
}

void anchors(VerifyReport& report) {
    report.checks.push_back(make_check("ratio_spd_at_r_psi_eq_lambda", std::abs(ratio_spd(1.0, 1.0) - 0.99168), 1e-4));
    report.checks.push_back(make_check("ula_ratio_at_r_a_eq_lambda", std::abs(ula_ratio(2.0 * kPi) - 0.98346), 1e-4));

    // Bisection for the crossing of ratio_spd through one, in units of lambda.
    double lo = 0.05;
    double hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ratio_spd(mid, 1.0) < 1.0 ? hi : lo) = mid;
    }
    report.checks.push_back(
        make_check("ratio_spd_threshold_crossing", rel_diff(0.5 * (lo + hi), ratio_spd_threshold(1.0)), 1e-9));
}

void sandwich(const VerifyOptions& o, VerifyReport& report) {
    for (KernelOrder n : kAllKernelOrders) {
        report.orders_covered.push_back(to_int(n));
        for (double psi : {0.1, 0.433, 0.9}) {
            bool holds = true;
            bool monotone = true;
            double previous_gap = INFINITY;
            double worst_violation = 0.0;
            for (double half : {1.0, 4.0, 16.0, 64.0}) {
                const SandwichResult s =
                    sandwich_check(1, 1, 2.0 * half, n, psi, oracle_quadrature_spec(), order_scale(o, n));
                holds = holds && s.holds && s.converged;
                const double below = (s.bounds.lower - s.centered_integral) / s.bounds.upper;
                const double above = (s.centered_integral - s.bounds.upper) / s.bounds.upper;
                worst_violation = std::max({worst_violation, below, above});
                const double gap = std::abs(s.centered_integral - integral_limit(n, psi));
                monotone = monotone && gap < previous_gap;
                previous_gap = gap;
            }
            std::ostringstream name;
            name << "sandwich_n" << to_int(n) << "_psi" << psi;
            VerifyCheck c{name.str(), holds && monotone, worst_violation, 1e-12,
                          std::string(holds ? "bounds hold" : "bounds violated") +
                              (monotone ? ", monotone convergence" : ", non-monotone convergence")};
            report.checks.push_back(c);
        }
    }
}

void recombination(const VerifyOptions& o, VerifyReport& report) {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double scale[3] = {order_scale(o, KernelOrder::three), order_scale(o, KernelOrder::five),
                             order_scale(o, KernelOrder::seven)};
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double r = 0.5 + 50.0 * unit(rng);
        const double theta = 0.05 + (kPi - 0.1) * unit(rng);
        const double phi = 0.05 + (kPi - 0.1) * unit(rng);
        const double lambda = 0.01 + unit(rng);
        const double mu = 0.05 + 0.95 * unit(rng);
        const UserPosition user(r, theta, phi);
        const Medium medium(lambda, 0.5 + unit(rng));
        worst = std::max(worst, rel_diff(recombined_upa_limit(user, medium, mu, scale),
                                         upa_asymptotic(user, medium, mu, true).value));
    }
    report.checks.push_back(make_check("limit_recombination", worst, 1e-12));
}

void consistency(const VerifyOptions& o, VerifyReport& report) {
    const ScenarioConfig defaults;
    const UserPosition user = defaults.user();
    const Medium medium = defaults.medium();
    QuadratureSpec spec;
    spec.rel_tol = o.rel_tol;

    const double eps = defaults.d / defaults.r;
    for (long m : {25L, 51L, 101L}) {
        const SpdArray array(m, m, defaults.d, defaults.element_area);
        const double sum = spd_gain_sum(array, user, medium);
        const double integral = spd_gain_integral(array, user, medium, spec).value;
        report.checks.push_back(
            make_check("sum_vs_integral_M" + std::to_string(m), rel_diff(sum, integral), 10.0 * eps * eps));
    }
    for (long m : {11L, 101L, 1001L}) {
        const SpdArray array(m, 1, defaults.d, defaults.element_area);
        report.checks.push_back(make_check("ula_closed_vs_quadrature_M" + std::to_string(m),
                                           rel_diff(ula_gain_closed(array, user, medium),
                                                    ula_gain_1d(array, user, medium, spec).value),
                                           1e-9));
    }
    {
        const SpdArray array(10000001, 1, defaults.d, defaults.element_area);
        report.checks.push_back(make_check(
            "ula_closed_vs_limit_M1e7",
            rel_diff(ula_gain_closed(array, user, medium),
                     ula_asymptotic(user, medium, defaults.d, defaults.element_area).value),
            1e-4));
    }
    {
        const SpdArray array(51, 51, defaults.d, defaults.element_area);
        const CapAperture aperture(array.length_x(), array.length_z());
        const double spd = spd_gain_integral(array, user, medium, spec).value;
        const double cap = cap_gain_integral(aperture, user, medium, spec).value;
        report.checks.push_back(
            make_check("cap_times_mu_vs_spd", rel_diff(cap * array.occupation_ratio(), spd), 5e-3));
    }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
    VerifyReport report;
    green_identity(report);
    anchors(report);
    sandwich(options, report);
    recombination(options, report);
    consistency(options, report);
    return report;
}

nlohmann::json to_json(const VerifyReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"measured", c.measured},
                          {"tolerance", c.tolerance},
                          {"detail", c.detail}});
    }
    return {{"all_passed", report.all_passed()},
            {"kernel_orders", report.orders_covered},
            {"checks", checks}};
}

}  // namespace nearfield
