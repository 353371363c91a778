#pragma once

// Scalar kernels of the channel-gain integrals.
//
// With b(x, z) = (x - Phi)^2 + Psi^2 + (z - Theta)^2 the squared normalised
// distance to the user, f_n = b^(-n/2). The power kernel including the reactive
// field terms is
//
//     f_3 - f_5 / (k0 r)^2 + f_7 / (k0 r)^4  =  f_3 * |1 + j u - u^2|^2,
//
// where u = 1 / (k0 r sqrt(b)) is the inverse electrical distance.

#include <cmath>

#include "nearfield/geometry.hpp"

namespace nearfield {

enum class KernelOrder : int { three = 3, five = 5, seven = 7 };

inline constexpr KernelOrder kAllKernelOrders[] = {KernelOrder::three, KernelOrder::five,
                                                   KernelOrder::seven};

inline int to_int(KernelOrder n) { return static_cast<int>(n); }

/// Throws ValidationError unless n is 3, 5 or 7.
KernelOrder kernel_order(int n);

struct ReactiveKernelParams {
    ReactiveKernelParams(const DirectionCosines& c, double k0r_value);

    DirectionCosines cosines;
    double k0r;
};

/// f_3, f_5, f_7 sharing one base evaluation.
struct KernelPowers {
    double f3;
    double f5;
    double f7;
};

inline double kernel_base(double x, double z, const DirectionCosines& c) {
    const double dx = x - c.big_phi();
    const double dz = z - c.big_theta();
    return dx * dx + c.big_psi() * c.big_psi() + dz * dz;
}

inline KernelPowers kernel_powers(double base) {
    const double inv = 1.0 / base;
    const double f3 = inv / std::sqrt(base);
    const double f5 = f3 * inv;
    return {f3, f5, f5 * inv};
}

inline double f_n(double x, double z, const DirectionCosines& c, KernelOrder n) {
    const KernelPowers p = kernel_powers(kernel_base(x, z, c));
    switch (n) {
        case KernelOrder::three:
            return p.f3;
        case KernelOrder::five:
            return p.f5;
        case KernelOrder::seven:
            return p.f7;
    }
    return p.f3;
}

/// Normalised distance rho = sqrt(b) = 1 / f_1.
inline double normalized_distance(double x, double z, const DirectionCosines& c) {
    return std::sqrt(kernel_base(x, z, c));
}

/// |(1 - u^2) + j u|^2 = 1 - u^2 + u^4. Never below 3/4.
inline double green_magnitude_sq(double u) {
    const double u2 = u * u;
    return 1.0 - u2 + u2 * u2;
}

inline double reactive_kernel(double x, double z, const ReactiveKernelParams& p) {
    const double base = kernel_base(x, z, p.cosines);
    const double u = 1.0 / (p.k0r * std::sqrt(base));
    return kernel_powers(base).f3 * green_magnitude_sq(u);
}

/// The radiating-only kernel, f_3.
inline double radiating_kernel(double x, double z, const DirectionCosines& c) {
    return kernel_powers(kernel_base(x, z, c)).f3;
}

inline double gain_kernel(double x, double z, const ReactiveKernelParams& p, bool include_reactive) {
    return include_reactive ? reactive_kernel(x, z, p) : radiating_kernel(x, z, p.cosines);
}

}  // namespace nearfield
