#include "nearfield/field_kernels.hpp"

#include <string>

namespace nearfield {

KernelOrder kernel_order(int n) {
    switch (n) {
        case 3:
            return KernelOrder::three;
        case 5:
            return KernelOrder::five;
        case 7:
            return KernelOrder::seven;
        default:
            throw ValidationError("kernel order must be 3, 5 or 7, got " + std::to_string(n));
    }
}

ReactiveKernelParams::ReactiveKernelParams(const DirectionCosines& c, double k0r_value)
    : cosines(c), k0r(k0r_value) {
    if (!(std::isfinite(k0r_value) && k0r_value > 0.0)) {
        throw ValidationError("k0 r must be positive and finite");
    }
}

}  // namespace nearfield
