#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "nearfield/closed_forms.hpp"

using namespace nearfield;

namespace {

const double kD = 0.0628;
const double kLambda = 2.0 * kD;
const double kArea = kLambda * kLambda / (4.0 * kPi);

UserPosition default_user() { return {5.0, kPi / 6.0, kPi / 3.0}; }

// User at angles (theta, phi) with r chosen so that r * Psi = target.
UserPosition user_at_perpendicular_distance(double target, double theta, double phi) {
    const double psi = std::sin(phi) * std::sin(theta);
    return {target / psi, theta, phi};
}

}  // namespace

TEST(RatioSpd, AnchorAtOneWavelength) {
    EXPECT_NEAR(ratio_spd(1.0, 1.0), 0.99168, 1e-4);
    EXPECT_NEAR(ratio_spd(kLambda, kLambda), 0.99168, 1e-4);
    EXPECT_NEAR(ratio_spd(1.0, 1.0), 2.0 * 0.4958424464039944, 1e-15);
}

TEST(RatioSpd, OneAtThreshold) {
    for (double lambda : {0.01, 0.1256, 1.0}) {
        EXPECT_NEAR(ratio_spd(ratio_spd_threshold(lambda), lambda), 1.0, 1e-12);
    }
    EXPECT_NEAR(ratio_spd_threshold(1.0), std::sqrt(0.15) / kPi, 1e-16);
}

TEST(RatioSpd, BelowOneBeyondThresholdAboveInside) {
    const double t = ratio_spd_threshold(1.0);
    EXPECT_LT(ratio_spd(1.01 * t, 1.0), 1.0);
    EXPECT_LT(ratio_spd(100.0, 1.0), 1.0);
    EXPECT_GT(ratio_spd(0.99 * t, 1.0), 1.0);
    EXPECT_NEAR(ratio_spd(1e6, 1.0), 1.0, 1e-12);
}

TEST(RatioSpd, BisectionLandsOnThreshold) {
    double lo = 0.05;
    double hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ratio_spd(mid, 1.0) < 1.0 ? hi : lo) = mid;
    }
    EXPECT_NEAR(0.5 * (lo + hi), ratio_spd_threshold(1.0), 1e-9 * ratio_spd_threshold(1.0));
}

TEST(RatioSpd, UserOverloadUsesPerpendicularDistance) {
    const auto u = default_user();
    EXPECT_DOUBLE_EQ(ratio_spd(u, Medium(kLambda)), ratio_spd(u.r() * u.cosines().big_psi(), kLambda));
    EXPECT_THROW(ratio_spd(0.0, 1.0), ValidationError);
    EXPECT_THROW(ratio_spd(1.0, -1.0), ValidationError);
}

TEST(UpaAsymptotic, RadiatingOnlyIsHalfTheOccupation) {
    EXPECT_DOUBLE_EQ(upa_asymptotic(default_user(), Medium(kLambda), 1.0, false).value, 0.5);
    EXPECT_DOUBLE_EQ(upa_asymptotic(default_user(), Medium(kLambda, 2.0), 0.25, false).value, 0.25);
    EXPECT_EQ(upa_asymptotic(default_user(), Medium(kLambda), 1.0, false).family, GainFamily::upa_rad);
}

TEST(UpaAsymptotic, PerpendicularDistanceOfOneWavelength) {
    const auto u = user_at_perpendicular_distance(kLambda, 1.0, 1.2);
    const auto g = upa_asymptotic(u, Medium(kLambda), 1.0);
    EXPECT_NEAR(g.value, 0.4958424464039944, 1e-14);
    EXPECT_NEAR(g.value, 0.5 - 1.0 / (24.0 * kPi * kPi) + 1.0 / (160.0 * std::pow(kPi, 4)), 1e-15);
    EXPECT_EQ(g.family, GainFamily::upa_eva);
}

TEST(UpaAsymptotic, FarUserLosesReactiveCorrection) {
    const UserPosition far(1e8, kPi / 6.0, kPi / 3.0);
    EXPECT_NEAR(upa_asymptotic(far, Medium(kLambda), 0.3).value, 0.15, 1e-15);
}

TEST(UpaAsymptotic, RejectsOccupationOutsideUnitInterval) {
    EXPECT_THROW(upa_asymptotic(default_user(), Medium(kLambda), 0.0), ValidationError);
    EXPECT_THROW(upa_asymptotic(default_user(), Medium(kLambda), 1.5), ValidationError);
}

TEST(CapAsymptotic, FullOccupationPlanarLimit) {
    const auto u = default_user();
    const Medium m(kLambda);
    const auto cap = cap_asymptotic(u, m);
    EXPECT_EQ(cap.value, upa_asymptotic(u, m, 1.0).value);
    EXPECT_EQ(cap.family, GainFamily::cap_eva);
    EXPECT_NEAR(cap.value, 0.499986, 1e-6);
    EXPECT_NEAR(cap.value, 0.49998579292094597, 1e-15);
    EXPECT_DOUBLE_EQ(cap_asymptotic(u, m, false).value, 0.5);
    EXPECT_EQ(cap_asymptotic(u, m, false).family, GainFamily::cap_rad);
}

TEST(CapAsymptotic, RatioOfLimitsIsRatioSpd) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const UserPosition u(0.1 + 10.0 * unit(rng), 0.05 + 3.0 * unit(rng), 0.05 + 3.0 * unit(rng));
        const Medium m(0.01 + unit(rng));
        EXPECT_NEAR(cap_asymptotic(u, m).value / cap_asymptotic(u, m, false).value, ratio_spd(u, m), 1e-14);
    }
}

TEST(UlaRatio, AnchorAtOneWavelength) {
    EXPECT_NEAR(ula_ratio(2.0 * kPi), 0.98346, 1e-4);
    EXPECT_NEAR(ula_ratio(2.0 * kPi), 0.9834553354680998, 1e-15);
    EXPECT_NEAR(ula_ratio(1e8), 1.0, 1e-15);
    EXPECT_THROW(ula_ratio(0.0), ValidationError);
}

TEST(UlaAsymptotic, RatioMatchesUlaRatio) {
    const auto u = default_user();
    const Medium m(kLambda);
    const double a = std::sqrt(u.cosines().a_phi_sq());
    const double eva = ula_asymptotic(u, m, kD, kArea).value;
    const double rad = ula_asymptotic(u, m, kD, kArea, false).value;
    EXPECT_NEAR(eva / rad, ula_ratio(m.wavenumber() * u.r() * a), 1e-14);
    const double psi = u.cosines().big_psi();
    EXPECT_NEAR(rad, kArea * psi / (2.0 * kPi * kD * u.r() * a * a), 1e-16);
}

TEST(UlaGainClosed, SingleElementMatchesPointKernel) {
    // One element: the closed form integrates over [-eps/2, eps/2]; for tiny eps
    // that is eps times the kernel at the origin.
    const UserPosition u(50.0, kPi / 6.0, kPi / 3.0);
    const Medium m(kLambda);
    const SpdArray one(1, 1, kD, kArea);
    const double g = ula_gain_closed(one, u, m, false);
    const double eps = kD / u.r();
    const double psi = u.cosines().big_psi();
    EXPECT_NEAR(g, kArea * psi / (4.0 * kPi * kD * u.r()) * eps, 1e-6 * g);
}

TEST(UlaGainClosed, ApproachesLimitAndIncreases) {
    const auto u = default_user();
    const Medium m(kLambda);
    const double limit = ula_asymptotic(u, m, kD, kArea).value;
    double previous = 0.0;
    for (long mx : {11L, 1001L, 100001L, 10000001L}) {
        const double g = ula_gain_closed(SpdArray(mx, 1, kD, kArea), u, m);
        EXPECT_GT(g, previous);
        EXPECT_LT(g, limit);
        previous = g;
    }
    EXPECT_NEAR(previous, limit, 1e-4 * limit);
}

TEST(UlaGainClosed, RejectsPlanarArray) {
    EXPECT_THROW(ula_gain_closed(SpdArray(11, 3, kD, kArea), default_user(), Medium(kLambda)), ValidationError);
}

TEST(GainFamily, Names) {
    EXPECT_STREQ(to_string(GainFamily::upa_eva), "upa_eva");
    EXPECT_STREQ(to_string(GainFamily::ula_rad), "ula_rad");
}
