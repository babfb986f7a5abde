#pragma once

// Scenario documents: a JSON object whose maps are prefix expression trees
// and whose complex numbers are "re+imj" strings. Every field except the map
// is optional.
//
//   {
//     "name": "squares",
//     "map": {"f1": "product(z1, z1)", "f2": "product(z1, z2)"},
//     "point": ["1", "1"],
//     "geodesic": {"g": "z", "orientation": "first"},
//     "device": {"kind": "linear", "weight": "0.5"},
//     "curves": ["radial", "angled(0.5)"],
//     "test_functions": ["first_ratio(1)", "projection"],
//     "radii": [0.25, 1, 4],
//     "samples": 10000,
//     "koranyi_M": [2, 4],
//     "seed": 1,
//     "tolerances": {"limit": 1e-8, "containment": 1e-9, "ratio": 1e-3, "lindelof": 1e-4}
//   }

#include "bidisc/julia.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bidisc {

struct Tolerances {
    double limit = 1e-8;
    double containment = 1e-9;
    double ratio = 1e-3;
    double lindelof = 1e-4;

    friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

struct GeodesicSpec {
    DiscMap g = DiscMap::identity();
    Orientation orientation = Orientation::first_identity;

    friend bool operator==(const GeodesicSpec&, const GeodesicSpec&) = default;
};

struct DeviceSpec {
    DeviceKind kind = DeviceKind::coordinate;
    Complex weight{0.5, 0.0}; // linear devices only

    friend bool operator==(const DeviceSpec&, const DeviceSpec&) = default;
};

struct Scenario {
    std::string name;
    BidiscMap map = BidiscMap::identity();
    std::optional<std::array<Complex, 2>> point;
    GeodesicSpec geodesic;
    DeviceSpec device;
    std::vector<CurveSpec> curves; // empty: the standard family
    std::vector<std::string> test_functions;
    std::vector<double> radii{0.25, 1.0, 4.0};
    std::size_t samples = 10000;
    std::vector<double> koranyi_M{2.0, 4.0};
    std::uint64_t seed = 1;
    Tolerances tolerances;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws parse on malformed documents or unknown constructors.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);
std::string serialize_scenario(const Scenario& s);

/// The geodesic through `point`, or through the base point 1 when absent.
ComplexGeodesic resolve_geodesic(const Scenario& s);
ProjectionDevice resolve_device(const Scenario& s, const ComplexGeodesic& geodesic);
std::vector<XCurve> resolve_curves(const Scenario& s, const ComplexGeodesic& geodesic);

/// component(j), first_ratio(j), second_ratio(j) or projection.
BidiscFunction make_test_function(std::string_view spec, const BidiscMap& f, const ProjectionDevice& device);

DeviceKind parse_device_kind(std::string_view text);

} // namespace bidisc
