#pragma once

// Channel gain of a spatially-discrete array by direct summation over elements,
// and the planar-wave (far-field) model it is compared with.

#include "nearfield/geometry.hpp"

namespace nearfield {

struct GainBreakdown {
    double with_reactive = 0.0;
    double radiating_only = 0.0;
    double far_field = 0.0;
    double ratio_eva_over_rad = 0.0;  // with_reactive / radiating_only
};

/// factor * (A Psi / (4 pi d^2)) * sum_{m_x, m_z} eps^2 * kernel(m_x eps, m_z eps).
///
/// Rows (fixed m_z) are summed pairwise and the row sums are then summed
/// pairwise, so the result is bit-reproducible regardless of threading.
/// Throws ValidationError if any element is closer to the user than sqrt(A).
double spd_gain_sum(const SpdArray& array, const UserPosition& user, const Medium& medium,
                    bool include_reactive = true);

/// factor * A Psi M / (4 pi r^2). Grows without bound in M.
double far_field_gain(const SpdArray& array, const UserPosition& user, const Medium& medium);

GainBreakdown gain_breakdown(const SpdArray& array, const UserPosition& user, const Medium& medium);

}  // namespace nearfield
