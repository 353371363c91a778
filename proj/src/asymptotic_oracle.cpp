#include "nearfield/asymptotic_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace nearfield {

namespace {

void require_psi(double psi) {
    if (!(std::isfinite(psi) && psi > 0.0)) {
        throw ValidationError("psi must be positive");
    }
}

double half_power(int n) { return 0.5 * static_cast<double>(n); }

}  // namespace

double disk_integral(KernelOrder n, double psi, double radius) {
    require_psi(psi);
    if (!(radius >= 0.0)) {
        throw ValidationError("disk radius must be non-negative");
    }
    const double e = half_power(to_int(n)) - 1.0;
    // Psi^(-2e) * (1 - (1 + R^2/Psi^2)^(-e)), free of cancellation for small R.
    const double ratio = (radius / psi) * (radius / psi);
    return kPi / e * std::pow(psi, -2.0 * e) * -std::expm1(-e * std::log1p(ratio));
}

double integral_limit(KernelOrder n, double psi) {
    require_psi(psi);
    const double e = half_power(to_int(n)) - 1.0;
    return kPi * std::pow(psi, -2.0 * e) / e;
}

DiskBounds disk_bounds(long m_x, long m_z, double epsilon, KernelOrder n, double psi) {
    if (m_x < 1 || m_z < 1 || !(epsilon > 0.0)) {
        throw ValidationError("disk bounds need positive element counts and epsilon");
    }
    DiskBounds b;
    const double mx = static_cast<double>(m_x);
    const double mz = static_cast<double>(m_z);
    b.r_in = 0.5 * epsilon * std::min(mx, mz);
    b.r_out = 0.5 * epsilon * std::sqrt(mx * mx + mz * mz);
    b.lower = disk_integral(n, psi, b.r_in);
    b.upper = disk_integral(n, psi, b.r_out);
    return b;
}

QuadratureResult centered_integral(double half_x, double half_z, KernelOrder n, double psi,
                                   const QuadratureSpec& spec, double scale) {
    QuadratureResult q = shifted_integral(half_x, half_z, 0.0, 0.0, n, psi, spec);
    q.value *= scale;
    q.error_estimate *= scale;
    return q;
}

QuadratureResult shifted_integral(double half_x, double half_z, double phi, double theta,
                                  KernelOrder n, double psi, const QuadratureSpec& spec) {
    require_psi(psi);
    const double p = -half_power(to_int(n));
    const double psi2 = psi * psi;
    const std::array<double, 3> cuts{-psi, 0.0, psi};
    return integrate_2d([&](double x, double z) { return std::pow(x * x + z * z + psi2, p); },
                        Rect{-half_x - phi, half_x - phi, -half_z - theta, half_z - theta}, spec, cuts,
                        cuts);
}

SandwichResult sandwich_check(long m_x, long m_z, double epsilon, KernelOrder n, double psi,
                              const QuadratureSpec& spec, double scale) {
    SandwichResult s;
    s.bounds = disk_bounds(m_x, m_z, epsilon, n, psi);
    const double hx = 0.5 * epsilon * static_cast<double>(m_x);
    const double hz = 0.5 * epsilon * static_cast<double>(m_z);
    const QuadratureResult q = centered_integral(hx, hz, n, psi, spec, scale);
    s.centered_integral = q.value;
    s.error_estimate = q.error_estimate;
    s.converged = q.converged;
    const double margin = 1e-12 * s.bounds.upper;
    s.holds = s.bounds.lower < s.bounds.upper && q.value > s.bounds.lower - margin &&
              q.value < s.bounds.upper + margin;
    return s;
}

double recombined_upa_limit(const UserPosition& user, const Medium& medium, double mu_oc,
                            const double (&scale)[3]) {
    const double psi = user.cosines().big_psi();
    const double k0r = medium.wavenumber() * user.r();
    const double k2 = k0r * k0r;
    const double bracket = scale[0] * integral_limit(KernelOrder::three, psi) -
                           scale[1] * integral_limit(KernelOrder::five, psi) / k2 +
                           scale[2] * integral_limit(KernelOrder::seven, psi) / (k2 * k2);
    return medium.radiation_factor() * mu_oc / (4.0 * kPi) * psi * bracket;
}

double recombined_upa_limit(const UserPosition& user, const Medium& medium, double mu_oc) {
    const double unit[3] = {1.0, 1.0, 1.0};
    return recombined_upa_limit(user, medium, mu_oc, unit);
}

}  // namespace nearfield
