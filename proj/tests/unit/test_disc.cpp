#include "bidisc/disc.hpp"
#include "bidisc/error.hpp"
#include "bidisc/random.hpp"
#include "bidisc/radial.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace bidisc;

TEST(PoincareDistance, CoincidentPointsAreAtDistanceZero) {
    EXPECT_EQ(poincare_distance(DiscPoint(0.0, 0.0), DiscPoint(0.0, 0.0)), 0.0);
}

TEST(PoincareDistance, HalfIsHalfLogThree) {
    EXPECT_NEAR(poincare_distance(DiscPoint(0.0, 0.0), DiscPoint(0.5, 0.0)), 0.5 * std::log(3.0), 1e-15);
}

TEST(PoincareDistance, SymmetricAndInvariantUnderAutomorphisms) {
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        const DiscPoint z = rng.disc_point();
        const DiscPoint w = rng.disc_point();
        const Automorphism m(rng.in_disc(0.9), rng.uniform(-3.0, 3.0));
        const double d = poincare_distance(z, w);
        EXPECT_NEAR(d, poincare_distance(w, z), 1e-12 * (1.0 + d));
        EXPECT_NEAR(d, poincare_distance(m(z), m(w)), 1e-10 * (1.0 + d));
    }
}

TEST(PoincareDistance, TriangleInequality) {
    Rng rng(12);
    for (int i = 0; i < 2000; ++i) {
        const DiscPoint a = rng.disc_point(), b = rng.disc_point(), c = rng.disc_point();
        EXPECT_LE(poincare_distance(a, c), poincare_distance(a, b) + poincare_distance(b, c) + 1e-12);
    }
}

TEST(PoincareDistance, StaysAccurateAtTheEndOfTheSchedule) {
    // omega(0, t) = atanh(t); with gaps carried exactly this holds at t = 1 - 2^-48.
    const double s = schedule_defect(48);
    const DiscPoint z = DiscPoint::radial(1.0, s);
    const double expected = 0.5 * (std::log(2.0 - s) - std::log(s));
    EXPECT_NEAR(poincare_distance(DiscPoint(0.0, 0.0), z), expected, 1e-12);
}

TEST(DiscPoint, RejectsPointsOnOrOutsideTheCircle) {
    EXPECT_THROW(DiscPoint(1.0, 0.0), Error);
    EXPECT_THROW(DiscPoint(0.0, -1.5), Error);
    EXPECT_NO_THROW(DiscPoint(0.999999, 0.0));
}

TEST(BoundaryPoint, RenormalisesNearlyUnimodularValues) {
    const BoundaryPoint p(Complex{1.0 + 1e-13, 0.0});
    EXPECT_EQ(std::abs(p.value()), 1.0);
    EXPECT_THROW(BoundaryPoint(Complex{0.9, 0.0}), Error);
}

TEST(Horocycle, ValueAtOriginIsOne) {
    EXPECT_DOUBLE_EQ(horocycle_value(BoundaryPoint(1.0), DiscPoint(0.0, 0.0)), 1.0);
}

TEST(Horocycle, TangentCirclePointHasValueR) {
    // E(1,1) is the Euclidean disc of centre 1/2 and radius 1/2.
    EXPECT_NEAR(horocycle_value(BoundaryPoint(1.0), DiscPoint(0.5, 0.5)), 1.0, 1e-15);
    const Horocycle h(BoundaryPoint(1.0), 1.0);
    EXPECT_DOUBLE_EQ(h.euclidean_center().real(), 0.5);
    EXPECT_DOUBLE_EQ(h.euclidean_radius(), 0.5);
}

TEST(Horocycle, RealApproachGivesOneMinusTOverOnePlusT) {
    for (const double t : {0.1, 0.5, 0.9, 0.999}) {
        EXPECT_NEAR(horocycle_value(BoundaryPoint(1.0), DiscPoint(t, 0.0)), (1 - t) / (1 + t), 1e-14);
    }
}

TEST(Horocycle, EuclideanFormMatchesBoundaryLimit) {
    Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        const BoundaryPoint sigma = BoundaryPoint::from_angle(rng.uniform(-3.0, 3.0));
        const DiscPoint z = rng.disc_point(0.9);
        const LimitEstimate e = radial_limit_defect([&](double s) {
            const DiscPoint w = DiscPoint::radial(sigma.value(), s);
            return std::exp(2.0 * (poincare_distance(z, w) - poincare_distance(DiscPoint(0.0, 0.0), w)));
        });
        ASSERT_TRUE(e.converged());
        EXPECT_NEAR(e.value, horocycle_value(sigma, z), 1e-6 * horocycle_value(sigma, z));
    }
}

TEST(Stolz, RadialApproachStaysInside) {
    const BoundaryPoint one(1.0);
    EXPECT_TRUE(stolz_contains(one, 2.0, DiscPoint(0.0, 0.0)));
    for (const double t : {0.1, 0.5, 0.99, 0.999999}) {
        EXPECT_TRUE(stolz_contains(one, 2.0, DiscPoint(t, 0.0)));
    }
}

TEST(Stolz, SteepApproachLeavesAmplitudeTwo) {
    const double eps = 1e-6;
    const DiscPoint z(1.0 - eps, 3.0 * eps);
    EXPECT_NEAR(stolz_ratio(BoundaryPoint(1.0), z), std::sqrt(10.0), 1e-3);
    EXPECT_FALSE(stolz_contains(BoundaryPoint(1.0), 2.0, z));
}

TEST(Automorphism, ZeroCentreZeroPhaseIsIdentity) {
    const Automorphism id(0.0, 0.0);
    const DiscPoint z(0.3, -0.2);
    EXPECT_EQ(id(z).value(), z.value());
}

TEST(Automorphism, InverseUndoesTheMap) {
    Rng rng(14);
    for (int i = 0; i < 500; ++i) {
        const Automorphism m(rng.in_disc(0.95), rng.uniform(-3.0, 3.0));
        const DiscPoint z = rng.disc_point();
        EXPECT_LT(std::abs(m.inverse()(m(z)).value() - z.value()), 1e-12);
    }
}

TEST(Automorphism, FixingKeepsTheBoundaryPoint) {
    const BoundaryPoint sigma = BoundaryPoint::from_angle(0.7);
    const Automorphism m = Automorphism::fixing(sigma, Complex{0.3, -0.4});
    EXPECT_LT(std::abs(m(sigma).value() - sigma.value()), 1e-14);
}
