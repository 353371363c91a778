#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <complex>

#include "nearfield/closed_forms.hpp"
#include "nearfield/gain_discrete.hpp"
#include "nearfield/gain_quadrature.hpp"

using namespace nearfield;

namespace {

const double kD = 0.0628;
const double kLambda = 2.0 * kD;
const double kArea = kLambda * kLambda / (4.0 * kPi);

UserPosition default_user() { return {5.0, kPi / 6.0, kPi / 3.0}; }
Medium default_medium() { return Medium(kLambda); }

// Element-by-element power from raw 3D points: projected area A * (r Psi / r_m)
// times the spherical spreading 1 / (4 pi r_m^2) times the complex Green factor.
double gain_from_points(const SpdArray& array, const UserPosition& u, double lambda, bool reactive) {
    const double st = std::sin(u.theta());
    const std::array<double, 3> s{u.r() * std::cos(u.phi()) * st, u.r() * std::sin(u.phi()) * st,
                                  u.r() * std::cos(u.theta())};
    const double k0 = 2.0 * kPi / lambda;
    double total = 0.0;
    for (long mz = -array.half_z(); mz <= array.half_z(); ++mz) {
        for (long mx = -array.half_x(); mx <= array.half_x(); ++mx) {
            const double dx = s[0] - static_cast<double>(mx) * array.spacing();
            const double dz = s[2] - static_cast<double>(mz) * array.spacing();
            const double rm = std::sqrt(dx * dx + s[1] * s[1] + dz * dz);
            const std::complex<double> j(0.0, 1.0);
            const std::complex<double> green = 1.0 + j / (k0 * rm) - 1.0 / (k0 * rm * k0 * rm);
            const double field = reactive ? std::norm(green) : 1.0;
            total += array.element_area() * (s[1] / rm) * field / (4.0 * kPi * rm * rm);
        }
    }
    return total;
}

}  // namespace

TEST(SpdGainSum, SingleElementAtDefaults) {
    const SpdArray one(1, 1, kD, kArea);
    const double g = spd_gain_sum(one, default_user(), default_medium());
    EXPECT_NEAR(g, 1.73026744461034e-06, 1e-13 * g);
    EXPECT_NEAR(g, 1.7305e-6, 2e-4 * 1.7305e-6);
    EXPECT_NEAR(g, gain_from_points(one, default_user(), kLambda, true), 1e-13 * g);
}

TEST(SpdGainSum, MatchesPointwiseOracleOnSmallArrays) {
    const UserPosition near(0.8, 1.1, 2.0);
    for (auto [mx, mz] : {std::pair{3L, 5L}, std::pair{11L, 1L}, std::pair{21L, 21L}}) {
        const SpdArray a(mx, mz, kD, kArea);
        for (bool reactive : {true, false}) {
            const double ref = gain_from_points(a, near, kLambda, reactive);
            EXPECT_NEAR(spd_gain_sum(a, near, default_medium(), reactive), ref, 1e-12 * ref);
        }
    }
}

TEST(SpdGainSum, RadiationFactorScalesLinearly) {
    const SpdArray a(9, 9, kD, kArea);
    const double base = spd_gain_sum(a, default_user(), default_medium());
    EXPECT_NEAR(spd_gain_sum(a, default_user(), Medium(kLambda, 0.5)), 0.5 * base, 1e-15 * base);
}

TEST(SpdGainSum, ReactiveTermsNegligibleAtDefaultsBroadside) {
    const SpdArray one(1, 1, kD, kArea);
    const UserPosition broadside(5.0, kPi / 2.0, kPi / 2.0);
    const double eva = spd_gain_sum(one, broadside, default_medium(), true);
    const double rad = spd_gain_sum(one, broadside, default_medium(), false);
    EXPECT_NEAR(eva, rad, 2e-5 * rad);
    EXPECT_LT(eva, rad);
}

TEST(SpdGainSum, RejectsUserInsideAnElement) {
    const SpdArray a(5, 5, kD, kArea);
    EXPECT_THROW(spd_gain_sum(a, UserPosition(0.01, kPi / 2, kPi / 2), default_medium()), ValidationError);
}

TEST(SpdGainSum, BitReproducible) {
    const SpdArray a(301, 301, kD, kArea);
    EXPECT_EQ(spd_gain_sum(a, default_user(), default_medium()), spd_gain_sum(a, default_user(), default_medium()));
}

TEST(SpdGainSum, IncreasesWithElementCountAndStaysBelowLimit) {
    const double limit = upa_asymptotic(default_user(), default_medium(), kArea / (kD * kD)).value;
    double previous = 0.0;
    for (long m : {1L, 5L, 25L, 101L, 501L, 2001L}) {
        const double g = spd_gain_sum(SpdArray(m, m, kD, kArea), default_user(), default_medium());
        EXPECT_GT(g, previous) << m;
        EXPECT_LT(g, limit) << m;
        previous = g;
    }
}

TEST(SpdGainSum, ApproachesTheIntegralAsSpacingShrinksAtFixedAperture) {
    // Fixed physical aperture 1.57 m; d shrinks, eps shrinks, mu fixed by scaling A.
    double previous = INFINITY;
    for (long m : {25L, 75L, 225L}) {
        const double d = 1.57 / static_cast<double>(m);
        const SpdArray a(m, m, d, d * d / kPi);
        const double sum = spd_gain_sum(a, default_user(), default_medium());
        const double integral = spd_gain_integral(a, default_user(), default_medium(), {1e-12}).value;
        const double err = std::abs(sum - integral) / integral;
        EXPECT_LT(err, previous) << m;
        previous = err;
    }
}

TEST(FarFieldGain, SingleElementAndLinearGrowth) {
    const double one = far_field_gain(SpdArray(1, 1, kD, kArea), default_user(), default_medium());
    EXPECT_NEAR(one, 1.73029510082706e-06, 1e-13 * one);
    const double big = far_field_gain(SpdArray(1001, 999, kD, kArea), default_user(), default_medium());
    EXPECT_NEAR(big, one * 1001.0 * 999.0, 1e-12 * big);
    EXPECT_GT(big, 1.0);
    EXPECT_NEAR(big, 1.731, 2e-3);
}

TEST(FarFieldGain, EqualsRadiatingSumForSingleElement) {
    const SpdArray one(1, 1, kD, kArea);
    EXPECT_NEAR(far_field_gain(one, default_user(), default_medium()),
                spd_gain_sum(one, default_user(), default_medium(), false), 1e-15);
}

TEST(GainBreakdown, SingleElementFieldsPositive) {
    const auto g = gain_breakdown(SpdArray(1, 1, kD, kArea), default_user(), default_medium());
    EXPECT_GT(g.with_reactive, 0.0);
    EXPECT_GT(g.radiating_only, 0.0);
    EXPECT_GT(g.far_field, 0.0);
    EXPECT_DOUBLE_EQ(g.ratio_eva_over_rad, g.with_reactive / g.radiating_only);
}

TEST(GainBreakdown, RatioWithinUnitIntervalBeyondInverseWavenumber) {
    for (double r : {0.1, 0.5, 2.0, 20.0}) {
        const auto g = gain_breakdown(SpdArray(31, 31, kD, kArea), UserPosition(r, 1.0, 1.3), default_medium());
        EXPECT_GT(g.ratio_eva_over_rad, 0.0) << r;
        EXPECT_LE(g.ratio_eva_over_rad, 1.0) << r;
    }
}

TEST(GainBreakdown, LargeArrayRatioApproachesClosedForm) {
    const auto g = gain_breakdown(SpdArray(301, 301, kD, kArea), default_user(), default_medium());
    EXPECT_NEAR(g.ratio_eva_over_rad, ratio_spd(default_user(), default_medium()), 1e-3);
}

TEST(GainBreakdown, FarFieldOvertakesPhysicalGain) {
    const auto small = gain_breakdown(SpdArray(25, 25, kD, kArea), default_user(), default_medium());
    EXPECT_LT(small.far_field, 1.0);
    const auto big = gain_breakdown(SpdArray(1501, 1501, kD, kArea), default_user(), default_medium());
    EXPECT_GT(big.far_field, 1.0);
    EXPECT_LT(big.with_reactive, 0.5);
    EXPECT_GT(big.far_field, big.with_reactive);
}
