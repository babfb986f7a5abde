#include "bidisc/error.hpp"
#include "bidisc/expr_text.hpp"
#include "bidisc/holomap.hpp"
#include "bidisc/random.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace bidisc;

TEST(DiscMap, IdentityEvaluatesToItsArgument) {
    EXPECT_EQ(DiscMap::identity()(Complex{0.3, 0.0}), Complex(0.3, 0.0));
}

TEST(DiscMap, PowerTwoSquares) {
    for (const double t : {0.0, 0.2, 0.7, 0.99}) {
        EXPECT_NEAR(std::abs(DiscMap::power(2)(Complex{t, 0.0}) - t * t), 0.0, 1e-15);
    }
}

TEST(DiscMap, ComposedMobiusAfterSquareMatchesClosedForm) {
    const DiscMap f = DiscMap::compose(DiscMap::mobius(0.5, 0.0), DiscMap::power(2));
    for (const double t : {0.0, 0.3, 0.8, 0.999}) {
        const double expected = (t * t - 0.5) / (1.0 - 0.5 * t * t);
        EXPECT_NEAR(f(Complex{t, 0.0}).real(), expected, 1e-14);
    }
}

TEST(DiscMap, DerivativeOfSquareAtHalfIsOne) {
    EXPECT_NEAR(std::abs(DiscMap::power(2).derivative(0.5) - 1.0), 0.0, 1e-15);
}

TEST(DiscMap, MobiusDerivativeAtTheBoundaryIsThree) {
    const Jet j = DiscMap::mobius(0.5, 0.0).jet(DiscPoint::with_gap(1.0, 0.0));
    EXPECT_NEAR(std::abs(j.d[0]), 3.0, 1e-14);
}

TEST(DiscMap, DerivativeMatchesFiniteDifferences) {
    Rng rng(21);
    const DiscMap f = parse_disc_map("compose(blaschke(0.3, 0.5, 1, -0.2+0.4j, 2), mix(0.25, power(3), mobius(0.1j, 1)))");
    for (int i = 0; i < 200; ++i) {
        const Complex z = rng.in_disc(0.8);
        const double h = 1e-6;
        const Complex fd = (f(z + h) - f(z - h)) / (2.0 * h);
        EXPECT_LT(std::abs(f.derivative(z) - fd), 1e-6 * (1.0 + std::abs(fd)));
    }
}

TEST(DiscMap, GapTrackingAgreesWithRecomputedGap) {
    Rng rng(22);
    const DiscMap f = parse_disc_map("compose(mobius(0.4-0.3j, 0.2), product(power(2), blaschke(0, 0.6, 1)))");
    for (int i = 0; i < 500; ++i) {
        const DiscPoint z = rng.disc_point(0.99);
        const DiscPoint w = f(z);
        const double direct = 1.0 - std::norm(w.value());
        EXPECT_NEAR(w.gap(), direct, 1e-12 + 1e-9 * direct);
    }
}

TEST(DiscMap, UnimodularConstantIsRejected) {
    EXPECT_THROW(DiscMap::constant(1.2), Error);
    EXPECT_THROW(DiscMap::constant(1.0), Error);
    EXPECT_THROW(parse_disc_map("const(1.2)"), Error);
}

TEST(DiscMap, AutomorphismInverseIsExact) {
    const DiscMap m = parse_disc_map("compose(mobius(0.3+0.2j, 0.7), mobius(-0.5, 1.1))");
    const auto inv = m.inverse();
    ASSERT_TRUE(inv.has_value());
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        const Complex z = rng.in_disc(0.95);
        EXPECT_LT(std::abs((*inv)(m(z)) - z), 1e-12);
    }
}

TEST(BidiscMap, IdentityAndProductsValidate) {
    EXPECT_TRUE(validate_self_map(BidiscMap::identity(), 2000, 1).pass);
    const BidiscMap f{BidiscComponent::product(BidiscComponent::coordinate(1), BidiscComponent::coordinate(2)),
                      BidiscComponent::coordinate(1)};
    const SelfMapReport r = validate_self_map(f, 2000, 2);
    EXPECT_TRUE(r.pass);
    EXPECT_LT(r.max_modulus, 1.0);
}

TEST(BidiscMap, JacobianOfSquaresPair) {
    const BidiscMap f{parse_component("product(z1, z1)"), parse_component("product(z1, z2)")};
    const BidiscPoint p(Complex{0.3, 0.1}, Complex{-0.2, 0.5});
    const auto J = f.jacobian(p);
    EXPECT_LT(std::abs(J[0][0] - 2.0 * p.z1.value()), 1e-15);
    EXPECT_LT(std::abs(J[0][1]), 1e-15);
    EXPECT_LT(std::abs(J[1][0] - p.z2.value()), 1e-15);
    EXPECT_LT(std::abs(J[1][1] - p.z1.value()), 1e-15);
}

TEST(ExprText, RoundTripsRandomTrees) {
    const char* texts[] = {
        "z",
        "power(3)",
        "mobius(0.5, 0)",
        "blaschke(0.25, 0.5, 1, 0.3j, 2)",
        "compose(mobius(-0.5, 0), power(2))",
        "mix(0.3, z, const(0.2-0.1j))",
        "product(power(2), mobius(0.1+0.2j, -1))",
    };
    for (const char* t : texts) {
        const DiscMap m = parse_disc_map(t);
        EXPECT_EQ(parse_disc_map(m.to_string()), m) << t;
    }
    const BidiscComponent c = parse_component("mix(0.5, compose(mobius(0.5, 0), z1), product(z1, z2))");
    EXPECT_EQ(parse_component(c.to_string()), c);
}

TEST(ExprText, MalformedTextIsAParseError) {
    for (const char* t : {"", "mobius(0.5)", "power(-1)", "compose(z)", "z3", "foo(1)", "mobius(0.5, 0) trailing"}) {
        try {
            (void)parse_disc_map(t);
            ADD_FAILURE() << "accepted '" << t << "'";
        } catch (const Error& e) {
            EXPECT_TRUE(e.code() == ErrorCode::parse || e.code() == ErrorCode::invalid_argument) << t;
        }
    }
}

TEST(ExprText, ComplexLiteralsRoundTrip) {
    Rng rng(24);
    for (int i = 0; i < 200; ++i) {
        const Complex z{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
        EXPECT_EQ(parse_complex(format_complex(z)), z);
    }
    EXPECT_EQ(parse_complex("2j"), Complex(0.0, 2.0));
    EXPECT_EQ(parse_complex("-0.25+1e-3j"), Complex(-0.25, 1e-3));
}
