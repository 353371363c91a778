#include "nearfield/gain_quadrature.hpp"

#include <array>

#include "nearfield/field_kernels.hpp"

namespace nearfield {

namespace {

QuadratureResult scaled(QuadratureResult q, double factor) {
    q.value *= factor;
    q.error_estimate *= factor;
    return q;
}

// Peak of the kernel is at the projection, width ~ Psi (2D) or a_Phi (1D).
std::array<double, 3> peak_cuts(double centre, double width) {
    return {centre - width, centre, centre + width};
}

}  // namespace

QuadratureResult kernel_integral(const Rect& rect, const UserPosition& user, const Medium& medium,
                                 const QuadratureSpec& spec, bool include_reactive) {
    const auto& c = user.cosines();
    const ReactiveKernelParams params(c, medium.wavenumber() * user.r());
    const auto x_cuts = peak_cuts(c.big_phi(), c.big_psi());
    const auto z_cuts = peak_cuts(c.big_theta(), c.big_psi());
    return integrate_2d(
        [&](double x, double z) { return gain_kernel(x, z, params, include_reactive); }, rect, spec,
        x_cuts, z_cuts);
}

QuadratureResult spd_gain_integral(const SpdArray& array, const UserPosition& user,
                                   const Medium& medium, const QuadratureSpec& spec,
                                   bool include_reactive) {
    const Region region = spd_region(array, user);
    const double d = array.spacing();
    const double prefactor =
        medium.radiation_factor() * array.element_area() * user.cosines().big_psi() / (4.0 * kPi * d * d);
    return scaled(kernel_integral(region.rect, user, medium, spec, include_reactive), prefactor);
}

QuadratureResult cap_gain_integral(const CapAperture& aperture, const UserPosition& user,
                                   const Medium& medium, const QuadratureSpec& spec,
                                   bool include_reactive) {
    const Region region = cap_region(aperture, user);
    const double prefactor = medium.radiation_factor() * user.cosines().big_psi() / (4.0 * kPi);
    return scaled(kernel_integral(region.rect, user, medium, spec, include_reactive), prefactor);
}

QuadratureResult ula_gain_1d(const SpdArray& array, const UserPosition& user, const Medium& medium,
                             const QuadratureSpec& spec, bool include_reactive) {
    if (array.m_z() != 1) {
        throw ValidationError("linear-array gain requires m_z == 1");
    }
    const auto& c = user.cosines();
    const ReactiveKernelParams params(c, medium.wavenumber() * user.r());
    const double half = 0.5 * static_cast<double>(array.m_x()) * array.spacing() / user.r();
    const auto cuts = peak_cuts(c.big_phi(), std::sqrt(c.a_phi_sq()));
    const QuadratureResult q = integrate_1d(
        [&](double x) { return gain_kernel(x, 0.0, params, include_reactive); }, -half, half, spec, cuts);
    const double prefactor = medium.radiation_factor() * array.element_area() * c.big_psi() /
                             (4.0 * kPi * array.spacing() * user.r());
    return scaled(q, prefactor);
}

}  // namespace nearfield
