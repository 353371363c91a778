#pragma once

// Receive-array and user geometry.
//
// The array lies in the x-z plane, centred at the origin, with its normal along
// +y. A user at distance r and angles (theta, phi) sits at r * (Phi, Psi, Theta)
// where (Phi, Psi, Theta) are the direction cosines. Everything downstream works
// in coordinates normalised by r.

#include <stdexcept>
#include <string>

namespace nearfield {

/// Thrown when an input violates a geometry or model invariant.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kPi = 3.14159265358979323846;

/// Unit direction from the array centre to the user.
class DirectionCosines {
public:
    /// Validates unit norm (1e-12) and psi > 0.
    DirectionCosines(double big_phi, double big_psi, double big_theta);

    double big_phi() const { return big_phi_; }
    double big_psi() const { return big_psi_; }
    double big_theta() const { return big_theta_; }

    /// a_Phi^2 = 1 - Phi^2 = Psi^2 + Theta^2, used by the linear-array closed forms.
    double a_phi_sq() const { return big_psi_ * big_psi_ + big_theta_ * big_theta_; }

private:
    double big_phi_;
    double big_psi_;
    double big_theta_;
};

/// (cos(phi) sin(theta), sin(phi) sin(theta), cos(theta)). Both angles must lie in (0, pi).
DirectionCosines direction_cosines(double theta, double phi);

class UserPosition {
public:
    UserPosition(double r, double theta, double phi);

    double r() const { return r_; }
    double theta() const { return theta_; }
    double phi() const { return phi_; }
    const DirectionCosines& cosines() const { return cosines_; }

private:
    double r_;
    double theta_;
    double phi_;
    DirectionCosines cosines_;
};

/// Spatially-discrete uniform planar array: m_x by m_z elements (both odd),
/// spacing d, element area a.
class SpdArray {
public:
    SpdArray(long m_x, long m_z, double d, double a);

    long m_x() const { return m_x_; }
    long m_z() const { return m_z_; }
    long half_x() const { return (m_x_ - 1) / 2; }
    long half_z() const { return (m_z_ - 1) / 2; }
    long element_count() const { return m_x_ * m_z_; }
    double spacing() const { return d_; }
    double element_area() const { return a_; }

    /// mu_oc = A / d^2, in (0, 1].
    double occupation_ratio() const { return a_ / (d_ * d_); }

    // Physical extent taken as L = M d.
    double length_x() const { return static_cast<double>(m_x_) * d_; }
    double length_z() const { return static_cast<double>(m_z_) * d_; }

private:
    long m_x_;
    long m_z_;
    double d_;
    double a_;
};

/// Continuous-aperture array of size l_x by l_z.
class CapAperture {
public:
    CapAperture(double l_x, double l_z);

    double length_x() const { return l_x_; }
    double length_z() const { return l_z_; }
    double area() const { return l_x_ * l_z_; }

private:
    double l_x_;
    double l_z_;
};

/// Propagation medium plus the scalar eta / (8 R_rad).
class Medium {
public:
    explicit Medium(double lambda, double radiation_factor = 1.0);

    double wavelength() const { return lambda_; }
    double wavenumber() const { return 2.0 * kPi / lambda_; }
    double radiation_factor() const { return radiation_factor_; }

private:
    double lambda_;
    double radiation_factor_;
};

/// Axis-aligned rectangle [x_min, x_max] x [z_min, z_max].
struct Rect {
    double x_min = 0.0;
    double x_max = 0.0;
    double z_min = 0.0;
    double z_max = 0.0;

    double width() const { return x_max - x_min; }
    double height() const { return z_max - z_min; }
    double area() const { return width() * height(); }
    bool contains(double x, double z) const {
        return x >= x_min && x <= x_max && z >= z_min && z <= z_max;
    }
};

/// Integration region in r-normalised coordinates.
struct Region {
    Rect rect;
    double epsilon = 0.0;  // d / r; zero for continuous apertures
    bool coarse = false;   // epsilon > 0.1: the sum -> integral replacement degrades
};

inline constexpr double kCoarseEpsilon = 0.1;

/// Distance from element (m_x_idx, m_z_idx) to the user. Indices must be in
/// [-half, half] for the array they belong to; that is the caller's contract.
double element_distance(const UserPosition& user, long m_x_idx, long m_z_idx, double d);

/// Smallest element-to-user distance over the whole array.
double min_element_distance(const SpdArray& array, const UserPosition& user);

/// H = [-M_x eps/2, M_x eps/2] x [-M_z eps/2, M_z eps/2], eps = d / r.
Region spd_region(const SpdArray& array, const UserPosition& user);

/// [-L_x/2r, L_x/2r] x [-L_z/2r, L_z/2r].
Region cap_region(const CapAperture& aperture, const UserPosition& user);

}  // namespace nearfield
