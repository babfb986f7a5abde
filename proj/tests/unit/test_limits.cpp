#include "bidisc/error.hpp"
#include "bidisc/expr_text.hpp"
#include "bidisc/limits.hpp"
#include "bidisc/random.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace bidisc;

namespace {

ComplexGeodesic diagonal() {
    return ComplexGeodesic::through(DiscMap::identity(), Orientation::first_identity, BoundaryPoint(1.0));
}

BidiscComponent comp(const char* text) { return parse_component(text); }

} // namespace

TEST(RadialLimit, OneMinusTTendsToZero) {
    const LimitEstimate e = radial_limit([](double t) { return 1.0 - t; });
    ASSERT_TRUE(e.converged());
    EXPECT_NEAR(e.value, 0.0, 1e-10);
}

TEST(RadialLimit, DistanceDifferenceTendsToHalfLogTwo) {
    const LimitEstimate e = radial_limit([](double t) { return 0.5 * std::log((1 + t) * (1 + t) / (1 + t * t)); });
    ASSERT_TRUE(e.converged());
    EXPECT_NEAR(e.value, 0.5 * std::log(2.0), 1e-10);
}

TEST(RadialLimit, DistanceToOriginDiverges) {
    const LimitEstimate e =
        radial_limit_defect([](double s) { return poincare_distance(DiscPoint(0.0, 0.0), DiscPoint::radial(1.0, s)); });
    EXPECT_TRUE(e.infinite());
    EXPECT_GT(e.value, 0.0);
}

TEST(RadialLimit, SteadyDriftThatSettlesIsNotDivergent) {
    // Drifts by -1/2 log 2 per step until k = 30, then stays.
    std::vector<double> v;
    for (int k = 4; k <= 48; ++k) {
        v.push_back(-0.5 * std::log(2.0) * std::min(k, 30));
    }
    const LimitEstimate e = analyse_sequence(v);
    EXPECT_TRUE(e.converged());
    EXPECT_NEAR(e.value, -15.0 * std::log(2.0), 1e-12);
}

TEST(RadialLimit, ConvergedImpliesSmallLastIncrement) {
    const LimitOptions o;
    const LimitEstimate e = radial_limit_defect([](double s) { return 1.0 + std::sqrt(s); }, o);
    ASSERT_TRUE(e.converged());
    EXPECT_LE(e.last_delta, o.tolerance * std::max(1.0, std::abs(e.value)));
    EXPECT_NEAR(e.value, 1.0, 1e-6);
}

TEST(DilationDisc, Oracles) {
    EXPECT_NEAR(dilation_disc(DiscMap::identity(), BoundaryPoint(1.0)), 1.0, 1e-8);
    EXPECT_NEAR(dilation_disc(DiscMap::power(2), BoundaryPoint(1.0)), 2.0, 1e-8);
    EXPECT_NEAR(dilation_disc(DiscMap::mobius(0.5, 0.0), BoundaryPoint(1.0)), 3.0, 1e-8);
}

TEST(DilationDisc, FlatTargetIsInfinite) {
    const DilationEstimate d = dilation_disc_estimate(DiscMap::constant(0.3), BoundaryPoint(1.0));
    EXPECT_TRUE(d.flat_target);
    EXPECT_TRUE(std::isinf(d.value));
}

TEST(DilationDisc, BlaschkeMatchesDerivativeModulus) {
    const DiscMap b = parse_disc_map("blaschke(0.4, 0.5, 1, 0.3j, 1)");
    const BoundaryPoint sigma = BoundaryPoint::from_angle(2.0);
    const double oracle = std::abs(b.jet(DiscPoint::with_gap(sigma.value(), 0.0)).d[0]);
    EXPECT_NEAR(dilation_disc(b, sigma), oracle, 1e-4 * oracle);
}

TEST(PhiDilation, DiagonalOracles) {
    EXPECT_NEAR(phi_dilation(comp("z1"), diagonal()), 1.0, 1e-7);
    EXPECT_NEAR(phi_dilation(comp("product(z1, z1)"), diagonal()), 2.0, 1e-7);
    EXPECT_NEAR(phi_dilation(comp("product(z1, z2)"), diagonal()), 2.0, 1e-7);
}

TEST(PhiDilation, InvariantUnderReparameterisation) {
    const auto g = ComplexGeodesic::through(DiscMap::power(2), Orientation::first_identity, BoundaryPoint(1.0));
    const BidiscComponent f = comp("compose(mobius(0.5, 0), z2)");
    const double lambda = phi_dilation(f, g);
    for (const Complex a : {Complex{0.3}, Complex{0.0, -0.4}, Complex{0.5, 0.2}}) {
        EXPECT_NEAR(phi_dilation(f, g, Automorphism::fixing(g.base(), a)), lambda, 1e-4 * lambda);
    }
}

TEST(AbateAlpha, Oracles) {
    EXPECT_NEAR(abate_alpha(comp("z1"), BidiscBoundaryPoint(1.0, 1.0)), 1.0, 1e-7);
    EXPECT_NEAR(abate_alpha(comp("product(z1, z1)"), BidiscBoundaryPoint(1.0, 1.0)), 2.0, 1e-7);
    EXPECT_NEAR(abate_alpha(comp("z1"), BidiscBoundaryPoint(1.0, 0.0)), 1.0, 1e-7);
}

TEST(Busemann, ValuesOnTheDiagonal) {
    EXPECT_NEAR(busemann_value(diagonal(), BidiscPoint(0.0, 0.0)), 0.0, 1e-9);
    EXPECT_NEAR(busemann_value(diagonal(), BidiscPoint(0.5, 0.5)), -0.5 * std::log(3.0), 1e-8);
    EXPECT_NEAR(busemann_closed_form(diagonal(), BidiscPoint(0.5, 0.5)), -0.5 * std::log(3.0), 1e-14);
}

TEST(Busemann, LimitAndClosedFormAgreeNearTheCircle) {
    const auto g = ComplexGeodesic::through(parse_disc_map("blaschke(0, 0.5, 1, 0.3j, 1)"),
                                            Orientation::first_identity, BoundaryPoint(1.0));
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        const double d1 = std::pow(10.0, -rng.uniform(1.0, 11.0));
        const BidiscPoint p(DiscPoint::radial(std::polar(1.0, rng.uniform(-3.0, 3.0)), d1), rng.disc_point());
        const LimitEstimate e = busemann_limit(g, p);
        ASSERT_TRUE(e.converged()) << e.diagnostic;
        EXPECT_NEAR(e.value, busemann_closed_form(g, p), 1e-6);
    }
}

TEST(Sublevel, OriginMembership) {
    const BidiscBoundaryPoint one(1.0, 1.0);
    EXPECT_TRUE(BusemannSublevel(one, 2.0, 1.0, 1.0).contains(BidiscPoint(0.0, 0.0)));
    EXPECT_FALSE(BusemannSublevel(one, 0.5, 1.0, 1.0).contains(BidiscPoint(0.0, 0.0)));
}

TEST(Sublevel, MatchesTheBusemannLevel) {
    const auto g = ComplexGeodesic::through(DiscMap::power(2), Orientation::first_identity, BoundaryPoint(1.0));
    Rng rng(42);
    for (const double R : {0.25, 1.0, 4.0}) {
        const BusemannSublevel s = BusemannSublevel::of_geodesic(g, R);
        for (int i = 0; i < 500; ++i) {
            const BidiscPoint p(rng.disc_point(), rng.disc_point());
            const double b = busemann_closed_form(g, p);
            if (std::abs(b - 0.5 * std::log(R)) > 1e-9) {
                EXPECT_EQ(s.contains(p), b <= 0.5 * std::log(R));
            }
        }
    }
}

TEST(Horosphere, OriginIsInsideTheSmallHorosphereForLargeR) {
    EXPECT_TRUE(horosphere_estimate(BidiscBoundaryPoint(1.0, 1.0), 2.0, BidiscPoint(0.0, 0.0), HorosphereMode::small).inside);
    EXPECT_THROW(horosphere_estimate(BidiscBoundaryPoint(1.0, 1.0), 2.0, BidiscPoint(0.0, 0.0), HorosphereMode::small, 4),
                 Error);
}

TEST(Koranyi, GeodesicPointsAreMembers) {
    const auto g = diagonal();
    for (const double M : {1.01, 2.0, 10.0}) {
        EXPECT_TRUE(koranyi_contains(g, M, BidiscPoint(0.0, 0.0)));
        EXPECT_TRUE(koranyi_contains(g, M, BidiscPoint(0.9, 0.9)));
    }
}

TEST(Koranyi, TangentialEscapeLeavesTheRegion) {
    const double t = 1.0 - 1e-6;
    const BidiscPoint p(Complex{t, 0.0}, std::polar(t, 0.05));
    EXPECT_FALSE(koranyi_contains(diagonal(), 4.0, p));
    EXPECT_THROW(koranyi_contains(diagonal(), 1.0, p), Error);
}
