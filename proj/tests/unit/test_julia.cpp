#include "bidisc/error.hpp"
#include "bidisc/expr_text.hpp"
#include "bidisc/julia.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace bidisc;

namespace {

ComplexGeodesic diagonal() {
    return ComplexGeodesic::through(DiscMap::identity(), Orientation::first_identity, BoundaryPoint(1.0));
}

BidiscMap map(const char* f1, const char* f2) { return {parse_component(f1), parse_component(f2)}; }

const BidiscMap kSquares = map("product(z1, z1)", "product(z1, z2)");

std::vector<XCurve> admissible(const ProjectionDevice& dev) {
    std::vector<XCurve> out;
    for (const CurveSpec& s : standard_family(dev.geodesic())) {
        XCurve c = make_curve(dev.geodesic(), s);
        if (is_admissible(c, dev)) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace

TEST(JuliaTarget, IdentityMapsOneOneToItself) {
    const JuliaTarget t = julia_target(BidiscMap::identity(), diagonal());
    EXPECT_LT(std::abs(t.y[0] - 1.0) + std::abs(t.y[1] - 1.0), 1e-12);
    EXPECT_NEAR(t.lambda[0], 1.0, 1e-7);
    EXPECT_NEAR(t.lambda[1], 1.0, 1e-7);
}

TEST(JuliaTarget, SquaresPairHasLambdaTwoTwo) {
    const JuliaTarget t = julia_target(kSquares, diagonal());
    EXPECT_LT(std::abs(t.y[0] - 1.0) + std::abs(t.y[1] - 1.0), 1e-12);
    EXPECT_NEAR(t.lambda[0], 2.0, 1e-7);
    EXPECT_NEAR(t.lambda[1], 2.0, 1e-7);
}

TEST(JuliaTarget, MobiusFirstComponentHasLambdaThree) {
    const JuliaTarget t = julia_target(map("compose(mobius(0.5, 0), z1)", "z2"), diagonal());
    EXPECT_LT(std::abs(t.y[0] - 1.0), 1e-12);
    EXPECT_NEAR(t.lambda[0], 3.0, 1e-7);
}

TEST(JuliaTarget, ConstantMapViolatesTheHypothesis) {
    try {
        (void)julia_target(map("const(0.5)", "const(0.5)"), diagonal());
        FAIL() << "expected hypothesis_violated";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::hypothesis_violated);
    }
}

TEST(JuliaLemma, IdentityAndSquaresHaveNoViolations) {
    for (const BidiscMap& f : {BidiscMap::identity(), kSquares}) {
        const JuliaCertificate c = verify_julia(f, diagonal(), {0.25, 1.0, 4.0}, 3000, 5);
        EXPECT_TRUE(c.pass());
        EXPECT_EQ(c.radii.size(), 3u);
        EXPECT_LE(c.worst_slack, kContainmentSlack);
    }
}

TEST(JuliaLemma, SameSeedSameCertificate) {
    const auto a = verify_julia(kSquares, diagonal(), {1.0}, 500, 9);
    const auto b = verify_julia(kSquares, diagonal(), {1.0}, 500, 9);
    EXPECT_EQ(a.worst_slack, b.worst_slack);
}

TEST(JuliaLemma, ContainmentFailsForAnExpandingMap) {
    // z -> (z1, z2) checked against a sublevel that is too small must fail.
    const auto g = diagonal();
    const BusemannSublevel source = BusemannSublevel::of_geodesic(g, 1.0);
    const BusemannSublevel target(g.x(), 0.5, 1.0, 1.0);
    Rng rng(3);
    EXPECT_GT(check_containment(BidiscMap::identity(), source, target, 500, rng).violations, 0u);
}

TEST(Jwc, IdentityRadialRatiosAreOne) {
    const auto dev = ProjectionDevice::coordinate(diagonal());
    const JwcReport r = jwc_ratios(BidiscMap::identity(), dev, {make_curve(diagonal(), {CurveKind::radial, 0.0})});
    for (int j = 0; j < 2; ++j) {
        EXPECT_NEAR(std::abs(r.curves[0].first[j].value - 1.0), 0.0, 1e-8);
        EXPECT_NEAR(std::abs(r.curves[0].second[j].value - 1.0), 0.0, 1e-8);
    }
}

TEST(Jwc, SquaresRatiosAreTwoOnEveryAdmissibleCurve) {
    const auto dev = ProjectionDevice::coordinate(diagonal());
    const auto curves = admissible(dev);
    ASSERT_GE(curves.size(), 5u);
    const JwcReport r = jwc_ratios(kSquares, dev, curves);
    EXPECT_NEAR(r.expected_first[0], 2.0, 1e-7);
    EXPECT_NEAR(r.expected_second[1], 2.0, 1e-7);
    EXPECT_LE(r.worst_deviation(), 1e-3);
    EXPECT_LE(r.worst_quotient_deviation(), 1e-3);
}

TEST(Jwc, LambdaTwoGeodesicSatisfiesMinMaxFormulas) {
    const auto g = ComplexGeodesic::through(DiscMap::power(2), Orientation::first_identity, BoundaryPoint(1.0));
    const auto dev = ProjectionDevice::coordinate(g);
    const JwcReport r = jwc_ratios(map("z1", "z1"), dev, admissible(dev));
    EXPECT_NEAR(r.lambda_g, 2.0, 1e-7);
    EXPECT_NEAR(r.expected_first[0], 1.0, 1e-7);
    EXPECT_NEAR(r.expected_second[0], 0.5, 1e-7);
    EXPECT_LE(r.worst_deviation(), 1e-3);
    EXPECT_LE(r.worst_quotient_deviation(), 1e-3);
}

TEST(Jwc, InadmissibleCurveIsRejected) {
    const auto dev = ProjectionDevice::coordinate(diagonal());
    try {
        (void)jwc_ratios(kSquares, dev, {make_curve(diagonal(), {CurveKind::tangential, 0.0})});
        FAIL() << "expected curve_not_admissible";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::curve_not_admissible);
    }
}

TEST(KgBound, SupIsMonotoneInMAndBelowTheBound) {
    const auto g = diagonal();
    const auto dev = ProjectionDevice::coordinate(g);
    const JuliaTarget t = julia_target(kSquares, g);
    const BidiscFunction h = jwc_first_ratio(kSquares, 1, t, dev);
    const auto rows = kg_bound_check(h, g, {1.5, 2.0, 4.0}, t.lambda[1], 10000, 4);
    ASSERT_EQ(rows.size(), 3u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_TRUE(rows[i].pass);
        EXPECT_GT(rows[i].accepted, 0u);
        if (i > 0) {
            EXPECT_GE(rows[i].observed_sup, rows[i - 1].observed_sup);
        }
    }
    EXPECT_NEAR(c_g(g), 1.0, 1e-15);
}

TEST(Lindelof, ProjectionLimitIsTheBaseCoordinate) {
    const auto g = diagonal();
    const auto dev = ProjectionDevice::coordinate(g);
    const BidiscFunction h{"projection", [&](const BidiscPoint& p) { return dev.left_inverse(p).value(); }};
    std::vector<XCurve> family;
    for (const CurveSpec& s : standard_family(g)) {
        family.push_back(make_curve(g, s));
    }
    const LindelofReport r = lindelof_check(h, dev, family);
    EXPECT_TRUE(r.pass);
    EXPECT_LT(std::abs(r.reference - 1.0), 1e-8);
    EXPECT_GE(r.admissible, 5u);
}

TEST(Lindelof, SecondRatioSeparatesInadmissibleCurves) {
    const auto g = diagonal();
    const auto dev = ProjectionDevice::coordinate(g);
    const JuliaTarget t = julia_target(kSquares, g);
    std::vector<XCurve> family;
    for (const CurveSpec& s : standard_family(g)) {
        family.push_back(make_curve(g, s));
    }
    const LindelofReport r = lindelof_check(jwc_second_ratio(kSquares, 1, t, dev), dev, family);
    EXPECT_TRUE(r.pass);
    EXPECT_GT(r.worst_inadmissible_deviation, 0.1);
}
