#pragma once

// Closed-form channel gains: large-aperture limits of planar (SPD and CAP) and
// linear arrays, the finite linear-array gain, and the reactive/radiating ratios.

#include "nearfield/geometry.hpp"

namespace nearfield {

enum class GainFamily { upa_eva, upa_rad, cap_eva, cap_rad, ula_eva, ula_rad };

const char* to_string(GainFamily family);

struct AsymptoticGain {
    double value = 0.0;
    GainFamily family = GainFamily::upa_eva;
};

/// Limit of the planar SPD gain as M_x, M_z -> infinity:
///   factor * mu_oc * (1/2 - t / (24 pi^2) + t^2 / (160 pi^4)),  t = (lambda / (r Psi))^2.
/// Without the reactive terms only factor * mu_oc / 2 remains. mu_oc must lie in (0, 1].
AsymptoticGain upa_asymptotic(const UserPosition& user, const Medium& medium, double mu_oc,
                              bool include_reactive = true);

/// Continuous-aperture limit; the planar limit at full occupation.
AsymptoticGain cap_asymptotic(const UserPosition& user, const Medium& medium,
                              bool include_reactive = true);

/// 1 - t / (12 pi^2) + t^2 / (80 pi^4) with t = (lambda / r_psi)^2; r_psi is the
/// perpendicular distance from the user to the array plane.
double ratio_spd(double r_psi, double lambda);
double ratio_spd(const UserPosition& user, const Medium& medium);

/// Perpendicular distance at which ratio_spd equals one: sqrt(3/20) * lambda / pi.
/// Beyond it the reactive terms reduce the gain.
double ratio_spd_threshold(double lambda);

/// Finite-length linear array (m_z == 1), antiderivatives of f_3, f_5, f_7 along x
/// evaluated at M eps / 2 +- Phi.
double ula_gain_closed(const SpdArray& array, const UserPosition& user, const Medium& medium,
                       bool include_reactive = true);

/// Linear-array limit as M -> infinity:
///   factor * A Psi / (2 pi d r a^2) * (1 - (2/3) / (k0 r a)^2 + (8/15) / (k0 r a)^4),  a = a_Phi.
AsymptoticGain ula_asymptotic(const UserPosition& user, const Medium& medium, double d, double a,
                              bool include_reactive = true);

/// Ratio of the two linear-array limits at electrical distance k0 r a_Phi.
double ula_ratio(double k0_r_a_phi);

}  // namespace nearfield
