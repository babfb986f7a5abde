#include "bidisc/dynamics.hpp"
#include "bidisc/error.hpp"
#include "bidisc/expr_text.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

using namespace bidisc;

namespace {

BidiscMap map(const char* f1, const char* f2) { return {parse_component(f1), parse_component(f2)}; }

// h(z) = (z + 1/2) / (1 + z/2), attracting at 1 and repelling at -1.
const BidiscMap kHPair = map("compose(mobius(-0.5, 0), z1)", "compose(mobius(-0.5, 0), z2)");
const BidiscMap kHSwap = map("compose(mobius(-0.5, 0), z2)", "compose(mobius(-0.5, 0), z1)");
const BidiscMap kHProduct = map("compose(mobius(-0.5, 0), z1)", "product(z1, z2)");

ComplexGeodesic diagonal() {
    return ComplexGeodesic::through(DiscMap::identity(), Orientation::first_identity, BoundaryPoint(1.0));
}

} // namespace

TEST(Iterate, IdentityOrbitIsConstant) {
    const BidiscPoint z0(Complex{0.2, 0.1}, Complex{-0.3, 0.0});
    for (const BidiscPoint& p : iterate(BidiscMap::identity(), z0, 10)) {
        EXPECT_EQ(p.z1.value(), z0.z1.value());
        EXPECT_EQ(p.z2.value(), z0.z2.value());
    }
}

TEST(Iterate, HPairOrbitTendsToOneOne) {
    const auto orbit = iterate(kHPair, BidiscPoint(0.0, 0.0), 200);
    ASSERT_EQ(orbit.size(), 201u);
    EXPECT_LT(std::abs(orbit.back().z1.value() - 1.0) + std::abs(orbit.back().z2.value() - 1.0), 1e-12);
}

TEST(TargetSet, SingleClusterAtOneOne) {
    for (const BidiscMap& f : {kHPair, kHSwap}) {
        const auto clusters = target_set(f, default_seeds(3), 400);
        ASSERT_EQ(clusters.size(), 1u);
        EXPECT_LT(std::abs(clusters[0].center[0] - 1.0) + std::abs(clusters[0].center[1] - 1.0), 1e-3);
    }
}

TEST(TargetSet, InteriorFixedPointIsReported) {
    try {
        (void)target_set(map("product(z1, z1)", "product(z2, z2)"), {BidiscPoint(0.5, 0.5)}, 400);
        FAIL() << "expected interior_fixed_point";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::interior_fixed_point);
    }
}

TEST(Herve, ThirdType) {
    const HerveClassification c = classify_herve(kHPair);
    EXPECT_EQ(c.type, HerveType::third);
    EXPECT_LT(std::abs(c.gamma1 - 1.0) + std::abs(c.gamma2 - 1.0), 1e-6);
    const WolffSets s = wolff_sets(c);
    EXPECT_EQ(s.w_case, "v");
    EXPECT_EQ(s.wg_case, "iii");
    EXPECT_EQ(s.w.to_string(), "{1}×Δ ∪ {(1,1)} ∪ Δ×{1}");
}

TEST(Herve, FirstType) {
    const HerveClassification c = classify_herve(kHSwap);
    EXPECT_EQ(c.type, HerveType::first);
    EXPECT_NEAR(c.lambda1, 1.0 / 3.0, 1e-6);
    EXPECT_NEAR(c.lambda2, 1.0 / 3.0, 1e-6);
    const WolffSets s = wolff_sets(c);
    EXPECT_EQ(s.w_case, "ii");
    EXPECT_EQ(s.wg_case, "i");
    EXPECT_EQ(s.w.to_string(), "{(1,1)}");
    EXPECT_EQ(s.wg.to_string(), "{(1,1)}");
}

TEST(Herve, SecondType) {
    const HerveClassification c = classify_herve(kHProduct);
    EXPECT_EQ(c.type, HerveType::second);
    EXPECT_LT(std::abs(c.alpha1 - 1.0), 1e-6);
    EXPECT_NEAR(c.k2, 0.0, 1e-6);
    const WolffSets s = wolff_sets(c);
    EXPECT_EQ(s.w_case, "iii");
    EXPECT_EQ(s.wg_case, "ii");
    EXPECT_TRUE(s.wg.contains(s.w));
}

TEST(Herve, SlicesSatisfyTheirFixedPointEquations) {
    const HerveClassification c = classify_herve(kHSwap);
    for (const SliceWitness& w : c.slices) {
        if (w.has_fixed_function) {
            EXPECT_LE(w.residual, 1e-8);
        }
    }
}

TEST(Herve, DegenerateCoordinateComponent) {
    const HerveClassification c = classify_herve(map("z1", "compose(mobius(-0.5, 0), z2)"));
    ASSERT_TRUE(c.degenerate.has_value());
    const WolffSets s = wolff_sets(c);
    EXPECT_EQ(s.w_case, "vi");
    EXPECT_FALSE(s.note.empty());
}

TEST(GeneralizedWolff, IdentityPassesEverywhere) {
    const BidiscBoundaryPoint tau(Complex{0.0, 1.0}, -1.0);
    const auto g = ComplexGeodesic::make(DiscMap::mobius(0.0, std::numbers::pi / 2 + std::numbers::pi),
                                         Orientation::first_identity, BidiscBoundaryPoint(Complex{0.0, 1.0}, 1.0));
    EXPECT_TRUE(check_generalized_wolff(BidiscMap::identity(), g.x(), g, {0.25, 1.0, 4.0}, 500, 1).pass);
    EXPECT_TRUE(generalized_wolff_test(BidiscMap::identity(), tau, {0.25, 1.0, 4.0}, 500, 1));
}

TEST(GeneralizedWolff, AttractingPairPassesAndRepellingPairFails) {
    EXPECT_TRUE(check_generalized_wolff(kHPair, BidiscBoundaryPoint(1.0, 1.0), diagonal(), {0.25, 1.0, 4.0}, 2000, 2).pass);
    EXPECT_FALSE(generalized_wolff_test(kHPair, BidiscBoundaryPoint(-1.0, -1.0), {0.25, 1.0, 4.0}, 2000, 2));
}

TEST(Dynamics, CorpusClassificationIsFast) {
    const auto start = std::chrono::steady_clock::now();
    for (const BidiscMap& f : {kHPair, kHSwap, kHProduct}) {
        (void)wolff_sets(classify_herve(f));
    }
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 60.0);
}
