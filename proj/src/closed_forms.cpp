#include "nearfield/closed_forms.hpp"

#include <cmath>

namespace nearfield {

const char* to_string(GainFamily family) {
    switch (family) {
        case GainFamily::upa_eva:
            return "upa_eva";
        case GainFamily::upa_rad:
            return "upa_rad";
        case GainFamily::cap_eva:
            return "cap_eva";
        case GainFamily::cap_rad:
            return "cap_rad";
        case GainFamily::ula_eva:
            return "ula_eva";
        case GainFamily::ula_rad:
            return "ula_rad";
    }
    return "unknown";
}

namespace {

constexpr double kPi2 = kPi * kPi;
constexpr double kPi4 = kPi2 * kPi2;

double planar_bracket(double r_psi, double lambda, bool include_reactive) {
    if (!include_reactive) {
        return 0.5;
    }
    const double t = (lambda / r_psi) * (lambda / r_psi);
    return 0.5 - t / (24.0 * kPi2) + t * t / (160.0 * kPi4);
}

double checked_a_phi_sq(const DirectionCosines& c) {
    const double a2 = c.a_phi_sq();
    // Psi > 0 already forces a_Phi^2 >= Psi^2 > 0; endfire is unreachable.
    if (!(a2 > 0.0)) {
        throw ValidationError("a_Phi must be positive (endfire user)");
    }
    return a2;
}

// Antiderivative terms of f_3, f_5, f_7 along the array axis at offset x.
double ula_bracket(double x, double a2, double k0r, bool include_reactive) {
    const double s = a2 + x * x;
    const double root = std::sqrt(s);
    const double term3 = x / (a2 * root);
    if (!include_reactive) {
        return term3;
    }
    const double k2 = k0r * k0r;
    const double a4 = a2 * a2;
    const double x2 = x * x;
    const double term5 = x * (3.0 * a2 + 2.0 * x2) / (3.0 * a4 * s * root);
    const double term7 = x * (15.0 * a4 + 20.0 * a2 * x2 + 8.0 * x2 * x2) / (15.0 * a4 * a2 * s * s * root);
    return term3 - term5 / k2 + term7 / (k2 * k2);
}

}  // namespace

AsymptoticGain upa_asymptotic(const UserPosition& user, const Medium& medium, double mu_oc,
                              bool include_reactive) {
    if (!(mu_oc > 0.0 && mu_oc <= 1.0)) {
        throw ValidationError("occupation ratio must lie in (0, 1]");
    }
    const double r_psi = user.r() * user.cosines().big_psi();
    return {medium.radiation_factor() * mu_oc * planar_bracket(r_psi, medium.wavelength(), include_reactive),
            include_reactive ? GainFamily::upa_eva : GainFamily::upa_rad};
}

AsymptoticGain cap_asymptotic(const UserPosition& user, const Medium& medium, bool include_reactive) {
    AsymptoticGain g = upa_asymptotic(user, medium, 1.0, include_reactive);
    g.family = include_reactive ? GainFamily::cap_eva : GainFamily::cap_rad;
    return g;
}

double ratio_spd(double r_psi, double lambda) {
    if (!(r_psi > 0.0) || !(lambda > 0.0)) {
        throw ValidationError("perpendicular distance and wavelength must be positive");
    }
    const double t = (lambda / r_psi) * (lambda / r_psi);
    return 1.0 - t / (12.0 * kPi2) + t * t / (80.0 * kPi4);
}

double ratio_spd(const UserPosition& user, const Medium& medium) {
    return ratio_spd(user.r() * user.cosines().big_psi(), medium.wavelength());
}

double ratio_spd_threshold(double lambda) { return std::sqrt(3.0 / 20.0) * lambda / kPi; }

double ula_gain_closed(const SpdArray& array, const UserPosition& user, const Medium& medium,
                       bool include_reactive) {
    if (array.m_z() != 1) {
        throw ValidationError("linear-array gain requires m_z == 1");
    }
    const auto& c = user.cosines();
    const double a2 = checked_a_phi_sq(c);
    const double k0r = medium.wavenumber() * user.r();
    const double half = 0.5 * static_cast<double>(array.m_x()) * array.spacing() / user.r();
    const double sum = ula_bracket(half + c.big_phi(), a2, k0r, include_reactive) +
                       ula_bracket(half - c.big_phi(), a2, k0r, include_reactive);
    return medium.radiation_factor() * array.element_area() * c.big_psi() /
           (4.0 * kPi * array.spacing() * user.r()) * sum;
}

AsymptoticGain ula_asymptotic(const UserPosition& user, const Medium& medium, double d, double a,
                              bool include_reactive) {
    if (!(d > 0.0) || !(a > 0.0)) {
        throw ValidationError("spacing and element area must be positive");
    }
    const auto& c = user.cosines();
    const double a2 = checked_a_phi_sq(c);
    const double base = medium.radiation_factor() * a * c.big_psi() / (2.0 * kPi * d * user.r() * a2);
    if (!include_reactive) {
        return {base, GainFamily::ula_rad};
    }
    return {base * ula_ratio(medium.wavenumber() * user.r() * std::sqrt(a2)), GainFamily::ula_eva};
}

double ula_ratio(double k0_r_a_phi) {
    if (!(k0_r_a_phi > 0.0)) {
        throw ValidationError("electrical distance must be positive");
    }
    const double q = 1.0 / (k0_r_a_phi * k0_r_a_phi);
    return 1.0 - (2.0 / 3.0) * q + (8.0 / 15.0) * q * q;
}

}  // namespace nearfield
