#include "bidisc/curves.hpp"
#include "bidisc/error.hpp"
#include "bidisc/expr_text.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

using namespace bidisc;

namespace {

ComplexGeodesic diagonal() {
    return ComplexGeodesic::through(DiscMap::identity(), Orientation::first_identity, BoundaryPoint(1.0));
}

// (1 - s, 1 - d(s)) toward (1,1).
XCurve real_curve(double (*defect2)(double), const char* label) {
    return XCurve(BidiscBoundaryPoint(1.0, 1.0),
                  [defect2](double s) { return BidiscPoint(DiscPoint::radial(1.0, s), DiscPoint::radial(1.0, defect2(s))); },
                  label);
}

} // namespace

TEST(Special, GeodesicRayIsSpecial) {
    const auto g = diagonal();
    const XCurve c = make_curve(g, {CurveKind::radial, 0.0});
    const Verdict v = is_g_special(c, ProjectionDevice::coordinate(g));
    EXPECT_TRUE(v.holds);
    EXPECT_NEAR(v.estimate.value, 0.0, 1e-12);
}

TEST(Special, QuadraticPerturbationIsSpecial) {
    const XCurve c = real_curve([](double s) { return s - s * s; }, "(t, t + (1-t)^2)");
    EXPECT_TRUE(is_g_special(c, ProjectionDevice::coordinate(diagonal())).holds);
    const LimitEstimate r = perturbation_ratio(c, diagonal());
    ASSERT_TRUE(r.converged());
    EXPECT_NEAR(r.value, 0.0, 1e-6);
}

TEST(Special, LinearPerturbationIsNotSpecial) {
    const XCurve c = real_curve([](double s) { return s / 2; }, "(t, t + (1-t)/2)");
    EXPECT_FALSE(is_g_special(c, ProjectionDevice::coordinate(diagonal())).holds);
    const LimitEstimate r = perturbation_ratio(c, diagonal());
    ASSERT_TRUE(r.converged());
    EXPECT_NEAR(r.value, 0.5, 1e-6);
}

TEST(Restricted, RadialCurveIsRestricted) {
    const auto g = diagonal();
    EXPECT_TRUE(is_g_restricted(make_curve(g, {CurveKind::radial, 0.0}), ProjectionDevice::coordinate(g), 2.0).holds);
}

TEST(Restricted, SixtyDegreeRayHasStolzRatioTwo) {
    const auto g = diagonal();
    const XCurve c = make_curve(g, {CurveKind::angled, std::numbers::pi / 3});
    const RestrictedVerdict v = is_g_restricted(c, ProjectionDevice::coordinate(g), 3.0);
    EXPECT_TRUE(v.holds);
    EXPECT_NEAR(v.tail_ratio, 2.0, 1e-6);
    EXPECT_FALSE(is_g_restricted(c, ProjectionDevice::coordinate(g), 1.9).holds);
}

TEST(Restricted, TangentialCurveIsNotRestricted) {
    const auto g = diagonal();
    const XCurve c = make_curve(g, {CurveKind::tangential, 0.0});
    for (const double M : {2.0, 10.0, 100.0}) {
        EXPECT_FALSE(is_g_restricted(c, ProjectionDevice::coordinate(g), M).holds);
    }
}

TEST(SpecialRatio, Oracles) {
    const auto diag = diagonal();
    const ComplexLimit one = special_ratio(make_curve(diag, {CurveKind::radial, 0.0}), RatioOrder::second_over_first);
    ASSERT_TRUE(one.converged());
    EXPECT_NEAR(std::abs(one.value - 1.0), 0.0, 1e-9);

    const auto sq = ComplexGeodesic::through(DiscMap::power(2), Orientation::first_identity, BoundaryPoint(1.0));
    const ComplexLimit two = special_ratio(make_curve(sq, {CurveKind::radial, 0.0}), RatioOrder::second_over_first);
    ASSERT_TRUE(two.converged());
    EXPECT_NEAR(std::abs(two.value - 2.0), 0.0, 1e-8);

    const auto mob = ComplexGeodesic::through(DiscMap::mobius(0.5, 0.0), Orientation::first_identity, BoundaryPoint(1.0));
    const ComplexLimit three = special_ratio(make_curve(mob, {CurveKind::radial, 0.0}), RatioOrder::second_over_first);
    ASSERT_TRUE(three.converged());
    EXPECT_NEAR(std::abs(three.value - 3.0), 0.0, 1e-8);
}

TEST(Family, RatioControlledAwayFromLambdaIsRestrictedButNotSpecial) {
    const auto sq = ComplexGeodesic::through(DiscMap::power(2), Orientation::first_identity, BoundaryPoint(1.0));
    const auto dev = ProjectionDevice::coordinate(sq);
    const XCurve at = make_curve(sq, {CurveKind::ratio_controlled, 2.0});
    const XCurve off = make_curve(sq, {CurveKind::ratio_controlled, 1.0});
    EXPECT_TRUE(is_admissible(at, dev));
    EXPECT_TRUE(is_g_restricted(off, dev, kAdmissibleAmplitude).holds);
    EXPECT_FALSE(is_g_special(off, dev).holds);
}

TEST(Family, StandardFamilyHasTwentyDistinctCurves) {
    for (const auto& g : {diagonal(), ComplexGeodesic::through(DiscMap::power(2), Orientation::first_identity,
                                                               BoundaryPoint(1.0))}) {
        const auto family = standard_family(g);
        EXPECT_EQ(family.size(), 20u);
        std::set<std::string> labels;
        for (const CurveSpec& s : family) {
            labels.insert(to_string(s));
        }
        EXPECT_EQ(labels.size(), family.size());
    }
}

TEST(Family, CurvesApproachTheirTarget) {
    const auto g = ComplexGeodesic::through(parse_disc_map("blaschke(0, 0.5, 1, 0.3j, 1)"),
                                            Orientation::second_identity, BoundaryPoint::from_angle(0.3));
    for (const CurveSpec& spec : standard_family(g)) {
        const XCurve c = make_curve(g, spec);
        const BidiscPoint p = c.at_defect(std::ldexp(1.0, -40));
        EXPECT_LT(std::abs(p.z1.value() - g.x().x1()) + std::abs(p.z2.value() - g.x().x2()), 1e-4) << c.label();
    }
}

TEST(Family, SpecTextRoundTrips) {
    for (const CurveSpec& s : standard_family(diagonal())) {
        EXPECT_EQ(parse_curve_spec(to_string(s)), s);
    }
    EXPECT_THROW(parse_curve_spec("wiggly(2)"), Error);
    EXPECT_THROW(make_curve(diagonal(), {CurveKind::special_perturbed, 0.5}), Error);
}
