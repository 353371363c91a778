#include "nearfield/gain_discrete.hpp"

#include <cmath>
#include <vector>

#include "nearfield/field_kernels.hpp"
#include "nearfield/parallel.hpp"
#include "nearfield/summation.hpp"

namespace nearfield {

double spd_gain_sum(const SpdArray& array, const UserPosition& user, const Medium& medium,
                    bool include_reactive) {
    const double closest = min_element_distance(array, user);
    if (closest < std::sqrt(array.element_area())) {
        throw ValidationError("user is closer to an element than the element size sqrt(A); "
                              "the constant-field-per-element model does not hold");
    }

    const auto& c = user.cosines();
    const double eps = array.spacing() / user.r();
    const ReactiveKernelParams params(c, medium.wavenumber() * user.r());
    const long hx = array.half_x();
    const long hz = array.half_z();

    std::vector<double> rows(static_cast<std::size_t>(array.m_z()));
    parallel_for(array.m_z(), [&](long j) {
        const double z = static_cast<double>(j - hz) * eps;
        rows[static_cast<std::size_t>(j)] = pairwise_sum_generated(-hx, hx + 1, [&](long m) {
            return gain_kernel(static_cast<double>(m) * eps, z, params, include_reactive);
        });
    });

    const double prefactor = medium.radiation_factor() * array.element_area() * c.big_psi() /
                             (4.0 * kPi * array.spacing() * array.spacing());
    return prefactor * eps * eps * pairwise_sum(rows);
}

double far_field_gain(const SpdArray& array, const UserPosition& user, const Medium& medium) {
    const double r = user.r();
    return medium.radiation_factor() * array.element_area() * user.cosines().big_psi() /
           (4.0 * kPi * r * r) * static_cast<double>(array.element_count());
}

GainBreakdown gain_breakdown(const SpdArray& array, const UserPosition& user, const Medium& medium) {
    GainBreakdown g;
    g.with_reactive = spd_gain_sum(array, user, medium, true);
    g.radiating_only = spd_gain_sum(array, user, medium, false);
    g.far_field = far_field_gain(array, user, medium);
    g.ratio_eva_over_rad = g.with_reactive / g.radiating_only;
    return g;
}

}  // namespace nearfield
