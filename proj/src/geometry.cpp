#include "nearfield/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace nearfield {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw ValidationError(what);
    }
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

bool open_angle(double a) { return std::isfinite(a) && a > 0.0 && a < kPi; }

}  // namespace

DirectionCosines::DirectionCosines(double big_phi, double big_psi, double big_theta)
    : big_phi_(big_phi), big_psi_(big_psi), big_theta_(big_theta) {
    const double norm_sq = big_phi * big_phi + big_psi * big_psi + big_theta * big_theta;
    require(std::isfinite(norm_sq) && std::abs(norm_sq - 1.0) <= 1e-12,
            "direction cosines must have unit norm");
    require(big_psi > 0.0, "Psi must be positive: user must lie strictly off the array plane");
}

DirectionCosines direction_cosines(double theta, double phi) {
    require(open_angle(theta), "theta must lie in the open interval (0, pi)");
    require(open_angle(phi), "phi must lie in the open interval (0, pi)");
    const double s = std::sin(theta);
    return {std::cos(phi) * s, std::sin(phi) * s, std::cos(theta)};
}

UserPosition::UserPosition(double r, double theta, double phi)
    : r_(r), theta_(theta), phi_(phi), cosines_(direction_cosines(theta, phi)) {
    require(finite_positive(r), "distance r must be positive and finite");
}

SpdArray::SpdArray(long m_x, long m_z, double d, double a) : m_x_(m_x), m_z_(m_z), d_(d), a_(a) {
    require(m_x > 0 && m_x % 2 == 1, "m_x must be a positive odd element count");
    require(m_z > 0 && m_z % 2 == 1, "m_z must be a positive odd element count");
    require(finite_positive(d), "element spacing d must be positive");
    require(finite_positive(a), "element area must be positive");
    // d >= sqrt(A), i.e. mu_oc <= 1; allow one ulp of slack for A = d^2 exactly.
    require(a <= d * d * (1.0 + 1e-15), "element spacing must be at least sqrt(element area)");
}

CapAperture::CapAperture(double l_x, double l_z) : l_x_(l_x), l_z_(l_z) {
    require(finite_positive(l_x), "aperture l_x must be positive and finite");
    require(finite_positive(l_z), "aperture l_z must be positive and finite");
}

Medium::Medium(double lambda, double radiation_factor)
    : lambda_(lambda), radiation_factor_(radiation_factor) {
    require(finite_positive(lambda), "wavelength must be positive");
    require(finite_positive(radiation_factor), "radiation factor must be positive");
}

double element_distance(const UserPosition& user, long m_x_idx, long m_z_idx, double d) {
    const auto& c = user.cosines();
    const double eps = d / user.r();
    const double dx = static_cast<double>(m_x_idx) * eps - c.big_phi();
    const double dz = static_cast<double>(m_z_idx) * eps - c.big_theta();
    return user.r() * std::sqrt(dx * dx + c.big_psi() * c.big_psi() + dz * dz);
}

double min_element_distance(const SpdArray& array, const UserPosition& user) {
    // The nearest element is the one whose index is closest to the user's projection.
    const auto& c = user.cosines();
    const double scale = user.r() / array.spacing();
    auto nearest = [](double projected, long half) {
        const double clamped = std::clamp(projected, -static_cast<double>(half), static_cast<double>(half));
        return static_cast<long>(std::lround(clamped));
    };
    const long ix = nearest(c.big_phi() * scale, array.half_x());
    const long iz = nearest(c.big_theta() * scale, array.half_z());
    return element_distance(user, ix, iz, array.spacing());
}

Region spd_region(const SpdArray& array, const UserPosition& user) {
    const double eps = array.spacing() / user.r();
    const double hx = 0.5 * static_cast<double>(array.m_x()) * eps;
    const double hz = 0.5 * static_cast<double>(array.m_z()) * eps;
    return {{-hx, hx, -hz, hz}, eps, eps > kCoarseEpsilon};
}

Region cap_region(const CapAperture& aperture, const UserPosition& user) {
    const double hx = 0.5 * aperture.length_x() / user.r();
    const double hz = 0.5 * aperture.length_z() / user.r();
    return {{-hx, hx, -hz, hz}, 0.0, false};
}

}  // namespace nearfield
