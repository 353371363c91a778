#pragma once

// Independent checks on the large-aperture limits.
//
// The origin-centred rectangle integral of 1/(x^2 + z^2 + Psi^2)^(n/2) is
// bracketed by the same integrand over the inscribed and circumscribed disks,
// which have the closed form
//
//     fhat_n(R) = pi / (n/2 - 1) * (Psi^(2-n) - (Psi^2 + R^2)^(1 - n/2)).
//
// Both bounds tend to pi Psi^(2-n) / (n/2 - 1) as the rectangle grows, which pins
// the limit of the integral. This module evaluates its own integrand; it does not
// reuse the gain kernels it is meant to check.

#include <vector>

#include "nearfield/field_kernels.hpp"
#include "nearfield/geometry.hpp"
#include "nearfield/quadrature.hpp"

namespace nearfield {

/// Integral of rho / (rho^2 + psi^2)^(n/2) over a disk of the given radius.
double disk_integral(KernelOrder n, double psi, double radius);

/// Limit of the rectangle integral: 2 pi / psi, (2 pi / 3) / psi^3, (2 pi / 5) / psi^5.
double integral_limit(KernelOrder n, double psi);

struct DiskBounds {
    double r_in = 0.0;   // min(M_x, M_z) eps / 2
    double r_out = 0.0;  // sqrt(M_x^2 + M_z^2) eps / 2
    double lower = 0.0;  // fhat_n(r_in)
    double upper = 0.0;  // fhat_n(r_out)
};

DiskBounds disk_bounds(long m_x, long m_z, double epsilon, KernelOrder n, double psi);

struct SandwichResult {
    DiskBounds bounds;
    double centered_integral = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    bool holds = false;  // lower < integral < upper, up to 1e-12 * upper
};

inline QuadratureSpec oracle_quadrature_spec() { return {1e-13, 1L << 20, 16}; }

/// Integral of 1/(x^2 + z^2 + psi^2)^(n/2) over [-half_x, half_x] x [-half_z, half_z],
/// optionally scaled by `scale` (used to inject deliberate faults).
QuadratureResult centered_integral(double half_x, double half_z, KernelOrder n, double psi,
                                   const QuadratureSpec& spec = oracle_quadrature_spec(),
                                   double scale = 1.0);

/// Same integrand with the rectangle shifted by (-phi, -theta), i.e. the integral of
/// f_n over the unshifted region for a user projecting onto (phi, theta).
QuadratureResult shifted_integral(double half_x, double half_z, double phi, double theta,
                                  KernelOrder n, double psi,
                                  const QuadratureSpec& spec = oracle_quadrature_spec());

/// Evaluates the centred integral and checks it lies between the disk bounds.
SandwichResult sandwich_check(long m_x, long m_z, double epsilon, KernelOrder n, double psi,
                              const QuadratureSpec& spec = oracle_quadrature_spec(),
                              double scale = 1.0);

/// The planar limit rebuilt from the three integral limits and the integral-form
/// prefactor: factor * (mu_oc / 4 pi) * Psi * (L3 - L5 / (k0 r)^2 + L7 / (k0 r)^4).
/// `scale[i]` multiplies the limit of order 3, 5, 7 respectively.
double recombined_upa_limit(const UserPosition& user, const Medium& medium, double mu_oc,
                            const double (&scale)[3]);
double recombined_upa_limit(const UserPosition& user, const Medium& medium, double mu_oc);

}  // namespace nearfield
