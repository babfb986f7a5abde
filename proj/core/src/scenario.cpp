#include "bidisc/scenario.hpp"

#include "bidisc/error.hpp"
#include "bidisc/expr_text.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace bidisc {

using Json = nlohmann::ordered_json;

namespace {

std::string component_text(const BidiscComponent& c) { return c.to_string(); }

int parse_index(std::string_view spec, std::string_view name) {
    const std::string inner(spec.substr(name.size() + 1, spec.size() - name.size() - 2));
    if (inner == "1") {
        return 0;
    }
    if (inner == "2") {
        return 1;
    }
    fail(ErrorCode::parse, "component index must be 1 or 2 in '" + std::string(spec) + "'");
}

bool has_call(std::string_view spec, std::string_view name) {
    return spec.size() > name.size() + 2 && spec.substr(0, name.size()) == name && spec[name.size()] == '(' &&
           spec.back() == ')';
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : j.items()) {
        if (!ok.count(key)) {
            fail(ErrorCode::parse, "unknown key '" + key + "' in " + where);
        }
    }
}

Scenario from_json(const Json& j) {
    if (!j.is_object()) {
        fail(ErrorCode::parse, "a scenario must be a JSON object");
    }
    check_keys(j, {"name", "map", "point", "geodesic", "device", "curves", "test_functions", "radii", "samples",
                   "koranyi_M", "seed", "tolerances"},
               "scenario");
    Scenario s;
    s.name = j.value("name", "");
    if (!j.contains("map")) {
        fail(ErrorCode::parse, "scenario has no map");
    }
    const Json& m = j.at("map");
    check_keys(m, {"f1", "f2"}, "map");
    s.map = BidiscMap{parse_component(m.at("f1").get<std::string>()), parse_component(m.at("f2").get<std::string>())};
    if (j.contains("point")) {
        const Json& p = j.at("point");
        if (!p.is_array() || p.size() != 2) {
            fail(ErrorCode::parse, "point must hold two complex numbers");
        }
        s.point = std::array<Complex, 2>{parse_complex(p[0].get<std::string>()), parse_complex(p[1].get<std::string>())};
    }
    if (j.contains("geodesic")) {
        const Json& g = j.at("geodesic");
        check_keys(g, {"g", "orientation"}, "geodesic");
        s.geodesic.g = parse_disc_map(g.value("g", "z"));
        s.geodesic.orientation = parse_orientation(g.value("orientation", "first"));
    }
    if (j.contains("device")) {
        const Json& d = j.at("device");
        check_keys(d, {"kind", "weight"}, "device");
        s.device.kind = parse_device_kind(d.value("kind", "coordinate"));
        if (d.contains("weight")) {
            s.device.weight = parse_complex(d.at("weight").get<std::string>());
        }
    }
    for (const auto& c : j.value("curves", Json::array())) {
        s.curves.push_back(parse_curve_spec(c.get<std::string>()));
    }
    for (const auto& t : j.value("test_functions", Json::array())) {
        s.test_functions.push_back(t.get<std::string>());
    }
    if (j.contains("radii")) {
        s.radii = j.at("radii").get<std::vector<double>>();
    }
    if (j.contains("samples")) {
        const Json& n = j.at("samples");
        if (!n.is_number_unsigned()) {
            fail(ErrorCode::parse, "samples must be a non-negative integer");
        }
        s.samples = n.get<std::size_t>();
    }
    if (j.contains("koranyi_M")) {
        s.koranyi_M = j.at("koranyi_M").get<std::vector<double>>();
    }
    s.seed = j.value("seed", s.seed);
    if (j.contains("tolerances")) {
        const Json& t = j.at("tolerances");
        check_keys(t, {"limit", "containment", "ratio", "lindelof"}, "tolerances");
        s.tolerances.limit = t.value("limit", s.tolerances.limit);
        s.tolerances.containment = t.value("containment", s.tolerances.containment);
        s.tolerances.ratio = t.value("ratio", s.tolerances.ratio);
        s.tolerances.lindelof = t.value("lindelof", s.tolerances.lindelof);
    }
    for (const double r : s.radii) {
        if (!(r > 0.0)) {
            fail(ErrorCode::parse, "radii must be positive");
        }
    }
    for (const double M : s.koranyi_M) {
        if (!(M > 1.0)) {
            fail(ErrorCode::parse, "Koranyi amplitudes must exceed 1");
        }
    }
    return s;
}

} // namespace

DeviceKind parse_device_kind(std::string_view text) {
    if (text == "coordinate") {
        return DeviceKind::coordinate;
    }
    if (text == "linear") {
        return DeviceKind::linear;
    }
    if (text == "abate") {
        return DeviceKind::abate;
    }
    fail(ErrorCode::parse, "unknown device kind '" + std::string(text) + "'");
}

Scenario parse_scenario(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        fail(ErrorCode::parse, std::string("malformed scenario: ") + e.what());
    }
    try {
        return from_json(j);
    } catch (const Json::exception& e) {
        fail(ErrorCode::parse, std::string("bad scenario field: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::invalid_argument) {
            fail(ErrorCode::parse, e.what());
        }
        throw;
    }
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorCode::parse, "cannot read scenario " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

std::string serialize_scenario(const Scenario& s) {
    Json j;
    j["name"] = s.name;
    j["map"] = {{"f1", component_text(s.map.f1)}, {"f2", component_text(s.map.f2)}};
    if (s.point) {
        j["point"] = Json::array({format_complex((*s.point)[0]), format_complex((*s.point)[1])});
    }
    j["geodesic"] = {{"g", s.geodesic.g.to_string()}, {"orientation", std::string(to_string(s.geodesic.orientation))}};
    j["device"] = {{"kind", std::string(to_string(s.device.kind))}, {"weight", format_complex(s.device.weight)}};
    j["curves"] = Json::array();
    for (const CurveSpec& c : s.curves) {
        j["curves"].push_back(to_string(c));
    }
    j["test_functions"] = s.test_functions;
    j["radii"] = s.radii;
    j["samples"] = s.samples;
    j["koranyi_M"] = s.koranyi_M;
    j["seed"] = s.seed;
    j["tolerances"] = {{"limit", s.tolerances.limit},
                       {"containment", s.tolerances.containment},
                       {"ratio", s.tolerances.ratio},
                       {"lindelof", s.tolerances.lindelof}};
    return j.dump(2) + "\n";
}

ComplexGeodesic resolve_geodesic(const Scenario& s) {
    if (s.point) {
        return ComplexGeodesic::make(s.geodesic.g, s.geodesic.orientation,
                                     BidiscBoundaryPoint((*s.point)[0], (*s.point)[1]));
    }
    return ComplexGeodesic::through(s.geodesic.g, s.geodesic.orientation, BoundaryPoint(Complex{1.0, 0.0}));
}

ProjectionDevice resolve_device(const Scenario& s, const ComplexGeodesic& geodesic) {
    switch (s.device.kind) {
    case DeviceKind::coordinate: return ProjectionDevice::coordinate(geodesic);
    case DeviceKind::linear: return ProjectionDevice::linear(geodesic, s.device.weight);
    case DeviceKind::abate: return ProjectionDevice::abate(geodesic);
    }
    fail(ErrorCode::invalid_argument, "unknown device kind");
}

std::vector<XCurve> resolve_curves(const Scenario& s, const ComplexGeodesic& geodesic) {
    const std::vector<CurveSpec> specs = s.curves.empty() ? standard_family(geodesic) : s.curves;
    std::vector<XCurve> out;
    for (const CurveSpec& c : specs) {
        out.push_back(make_curve(geodesic, c));
    }
    return out;
}

BidiscFunction make_test_function(std::string_view spec, const BidiscMap& f, const ProjectionDevice& device) {
    if (spec == "projection") {
        return {"projection", [device](const BidiscPoint& p) { return device.left_inverse(p).value(); }};
    }
    if (has_call(spec, "component")) {
        const BidiscComponent c = f.component(parse_index(spec, "component"));
        return {std::string(spec), [c](const BidiscPoint& p) { return c(p).value(); }};
    }
    const bool first = has_call(spec, "first_ratio");
    if (first || has_call(spec, "second_ratio")) {
        const int j = parse_index(spec, first ? "first_ratio" : "second_ratio");
        const JuliaTarget target = julia_target(f, device.geodesic());
        BidiscFunction h = first ? jwc_first_ratio(f, j, target, device) : jwc_second_ratio(f, j, target, device);
        h.name = std::string(spec);
        return h;
    }
    fail(ErrorCode::parse, "unknown test function '" + std::string(spec) + "'");
}

} // namespace bidisc
