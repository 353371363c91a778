#pragma once

// Channel gain from the integral forms: the element sum replaced by a double
// integral over the normalised aperture (SPD), the continuous-aperture integral
// (CAP), and the single integral of a linear array.
//
// Results carry the quadrature error estimate scaled by the same prefactor as the
// value. An exhausted panel budget is reported through `converged == false`.

#include "nearfield/geometry.hpp"
#include "nearfield/quadrature.hpp"

namespace nearfield {

/// Integral of the (reactive or radiating) kernel over `rect`, with the initial
/// panel grid refined around the user's projection (Phi, Theta).
QuadratureResult kernel_integral(const Rect& rect, const UserPosition& user, const Medium& medium,
                                 const QuadratureSpec& spec, bool include_reactive);

/// factor * (A Psi / (4 pi d^2)) * integral over H.
QuadratureResult spd_gain_integral(const SpdArray& array, const UserPosition& user,
                                   const Medium& medium, const QuadratureSpec& spec = {},
                                   bool include_reactive = true);

/// factor * (Psi / (4 pi)) * integral over [-L_x/2r, L_x/2r] x [-L_z/2r, L_z/2r].
QuadratureResult cap_gain_integral(const CapAperture& aperture, const UserPosition& user,
                                   const Medium& medium, const QuadratureSpec& spec = {},
                                   bool include_reactive = true);

/// factor * (A Psi / (4 pi d r)) * integral over [-M eps/2, M eps/2] of kernel(x, 0).
/// Requires m_z == 1.
QuadratureResult ula_gain_1d(const SpdArray& array, const UserPosition& user, const Medium& medium,
                             const QuadratureSpec& spec = {}, bool include_reactive = true);

}  // namespace nearfield
