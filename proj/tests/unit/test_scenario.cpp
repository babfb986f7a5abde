#include "bidisc/error.hpp"
#include "bidisc/expr_text.hpp"
#include "bidisc/random.hpp"
#include "bidisc/scenario.hpp"
#include "bidisc/verification.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <optional>

using namespace bidisc;

namespace {

Complex random_complex(Rng& rng, double radius) { return rng.in_disc(radius); }

DiscMap random_disc_map(Rng& rng, int depth) {
    const int pick = depth <= 0 ? static_cast<int>(rng.uniform() * 4) : static_cast<int>(rng.uniform() * 8);
    switch (pick) {
    case 0: return DiscMap::identity();
    case 1: return DiscMap::power(1 + static_cast<int>(rng.uniform() * 4));
    case 2: return DiscMap::mobius(random_complex(rng, 0.9), rng.uniform(-3.0, 3.0));
    case 3: return DiscMap::constant(random_complex(rng, 0.9));
    case 4:
        return DiscMap::blaschke({{random_complex(rng, 0.9), 1}, {random_complex(rng, 0.9), 2}}, rng.uniform(-3.0, 3.0));
    case 5: return DiscMap::compose(random_disc_map(rng, depth - 1), random_disc_map(rng, depth - 1));
    case 6: return DiscMap::convex_mix(rng.uniform(), random_disc_map(rng, depth - 1), random_disc_map(rng, depth - 1));
    default: return DiscMap::product(random_disc_map(rng, depth - 1), random_disc_map(rng, depth - 1));
    }
}

BidiscComponent random_component(Rng& rng, int depth) {
    const int pick = depth <= 0 ? static_cast<int>(rng.uniform() * 2) : static_cast<int>(rng.uniform() * 5);
    switch (pick) {
    case 0: return BidiscComponent::coordinate(1 + static_cast<int>(rng.uniform() * 2));
    case 1: return BidiscComponent::constant(random_complex(rng, 0.9));
    case 2: return BidiscComponent::compose(random_disc_map(rng, depth - 1), random_component(rng, depth - 1));
    case 3:
        return BidiscComponent::convex_mix(rng.uniform(), random_component(rng, depth - 1),
                                           random_component(rng, depth - 1));
    default: return BidiscComponent::product(random_component(rng, depth - 1), random_component(rng, depth - 1));
    }
}

Scenario random_scenario(Rng& rng, int i) {
    Scenario s;
    s.name = "random_" + std::to_string(i);
    s.map = {random_component(rng, 3), random_component(rng, 3)};
    if (rng.uniform() < 0.5) {
        s.point = std::array<Complex, 2>{std::polar(1.0, rng.uniform(-3.0, 3.0)), random_complex(rng, 1.0)};
    }
    s.geodesic.g = random_disc_map(rng, 2);
    s.geodesic.orientation = rng.uniform() < 0.5 ? Orientation::first_identity : Orientation::second_identity;
    const double kind = rng.uniform();
    s.device.kind = kind < 1.0 / 3 ? DeviceKind::coordinate : (kind < 2.0 / 3 ? DeviceKind::linear : DeviceKind::abate);
    s.device.weight = random_complex(rng, 2.0);
    const int curves = static_cast<int>(rng.uniform() * 4);
    for (int c = 0; c < curves; ++c) {
        const CurveKind k = static_cast<CurveKind>(static_cast<int>(rng.uniform() * 5));
        double param = 0.0;
        switch (k) {
        case CurveKind::angled: param = rng.uniform(-1.5, 1.5); break;
        case CurveKind::special_perturbed: param = rng.uniform(1.1, 4.0); break;
        case CurveKind::ratio_controlled: param = rng.uniform(0.1, 5.0); break;
        default: break;
        }
        s.curves.push_back({k, param});
    }
    const char* functions[] = {"projection", "component(1)", "first_ratio(2)", "second_ratio(1)"};
    for (int f = 0; f < 3; ++f) {
        if (rng.uniform() < 0.5) {
            s.test_functions.push_back(functions[static_cast<int>(rng.uniform() * 4)]);
        }
    }
    s.radii = {rng.uniform(0.01, 1.0), rng.uniform(1.0, 20.0)};
    s.samples = 1 + static_cast<std::size_t>(rng.uniform() * 50000);
    s.koranyi_M = {rng.uniform(1.01, 3.0), rng.uniform(3.0, 10.0)};
    s.seed = rng.next();
    s.tolerances = {rng.uniform(1e-12, 1e-6), rng.uniform(1e-12, 1e-6), rng.uniform(1e-5, 1e-2), rng.uniform(1e-6, 1e-3)};
    return s;
}

std::optional<ErrorCode> code_of(const char* text) {
    try {
        (void)parse_scenario(text);
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace

TEST(Scenario, RoundTripsOneHundredRandomScenarios) {
    Rng rng(2024);
    for (int i = 0; i < 100; ++i) {
        const Scenario s = random_scenario(rng, i);
        const std::string text = serialize_scenario(s);
        const Scenario back = parse_scenario(text);
        EXPECT_EQ(back, s) << text;
        EXPECT_EQ(serialize_scenario(back), text);
    }
}

TEST(Scenario, OnlyTheMapIsRequired) {
    const Scenario s = parse_scenario(R"js({"map": {"f1": "z1", "f2": "product(z1, z2)"}})js");
    EXPECT_EQ(s.radii, (std::vector<double>{0.25, 1.0, 4.0}));
    EXPECT_EQ(s.samples, 10000u);
    EXPECT_EQ(s.tolerances, Tolerances{});
    EXPECT_FALSE(s.point.has_value());
}

TEST(Scenario, MalformedDocumentsAreParseErrors) {
    EXPECT_EQ(code_of("not json"), ErrorCode::parse);
    EXPECT_EQ(code_of(R"js({"map": {"f1": "z1"}})js"), ErrorCode::parse);
    EXPECT_EQ(code_of(R"js({"map": {"f1": "z1", "f2": "z3"}})js"), ErrorCode::parse);
    EXPECT_EQ(code_of(R"js({"map": {"f1": "z1", "f2": "z2"}, "extra": 1})js"), ErrorCode::parse);
    EXPECT_EQ(code_of(R"js({"map": {"f1": "z1", "f2": "z2"}, "device": {"kind": "magic"}})js"), ErrorCode::parse);
    EXPECT_EQ(code_of(R"js({"map": {"f1": "z1", "f2": "z2"}, "samples": -3})js"), ErrorCode::parse);
}

TEST(Scenario, TestFunctionsResolve) {
    const Scenario s = parse_scenario(R"js({"map": {"f1": "product(z1, z1)", "f2": "product(z1, z2)"}, "point": ["1", "1"]})js");
    const ComplexGeodesic g = resolve_geodesic(s);
    const ProjectionDevice dev = resolve_device(s, g);
    const BidiscPoint p(0.3, 0.2);
    EXPECT_LT(std::abs(make_test_function("projection", s.map, dev).eval(p) - 0.3), 1e-15);
    EXPECT_LT(std::abs(make_test_function("component(2)", s.map, dev).eval(p) - 0.06), 1e-15);
    EXPECT_THROW(make_test_function("component(3)", s.map, dev), Error);
    EXPECT_EQ(resolve_curves(s, g).size(), 20u);
}

TEST(Scenario, BundledCorpusLoads) {
    const Corpus c = load_corpus(BIDISC_TEST_CORPUS);
    EXPECT_GE(c.maps.size(), 8u);
    for (const char* name : {"identity", "squares", "constant", "first_type", "second_type", "third_type"}) {
        const Scenario s = c.scenario(name);
        EXPECT_EQ(parse_scenario(serialize_scenario(s)), s);
    }
}
