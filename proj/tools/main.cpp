#include "output.hpp"

#include "bidisc/dynamics.hpp"
#include "bidisc/error.hpp"
#include "bidisc/expr_text.hpp"
#include "bidisc/scenario.hpp"
#include "bidisc/verification.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace bidisc::cli {
namespace {

enum Exit { ok = 0, assertion = 1, input = 2, hypothesis = 3 };

struct Common {
    std::string scenario;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    bool json = false;
    bool csv = false;
};

void add_common(CLI::App* app, Common& c, bool scenario = true) {
    if (scenario) {
        app->add_option("--scenario", c.scenario, "Scenario file (JSON)");
    }
    app->add_option("--seed", c.seed, "Seed overriding the scenario's");
    app->add_option("--tol", c.tol, "Tolerance overriding the command's primary tolerance");
    app->add_flag("--json", c.json, "Line-delimited machine records");
}

Scenario load(const Common& c) {
    if (c.scenario.empty()) {
        fail(ErrorCode::invalid_argument, "--scenario is required");
    }
    Scenario s = load_scenario(c.scenario);
    if (c.seed) {
        s.seed = *c.seed;
    }
    return s;
}

std::array<Complex, 2> parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        fail(ErrorCode::parse, "expected a pair z1,z2 but got '" + text + "'");
    }
    return {parse_complex(text.substr(0, comma)), parse_complex(text.substr(comma + 1))};
}

BidiscPoint parse_bidisc_point(const std::string& text) {
    const auto p = parse_pair(text);
    return BidiscPoint(p[0], p[1]);
}

void csv_header(std::ostream& out) { out << "t,value\n"; }

void csv_row(std::ostream& out, int k, double value) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", schedule_t(k), value);
    out << buf;
}

// ---------------------------------------------------------------- distance
struct DistanceArgs {
    std::vector<std::string> disc;
    std::vector<std::string> bidisc;
};

int run_distance(const Common& c, const DistanceArgs& a) {
    Report rep("distance", c.json, c.seed.value_or(1), Tolerances{});
    rep.omit_footer();
    if (a.disc.empty() == a.bidisc.empty()) {
        fail(ErrorCode::invalid_argument, "give exactly one of --disc z w or --bidisc z1,z2 w1,w2");
    }
    double value = 0.0;
    std::string kind;
    if (!a.disc.empty()) {
        kind = "disc";
        value = poincare_distance(DiscPoint(parse_complex(a.disc[0])), DiscPoint(parse_complex(a.disc[1])));
    } else {
        kind = "bidisc";
        value = kobayashi_distance(parse_bidisc_point(a.bidisc[0]), parse_bidisc_point(a.bidisc[1]));
    }
    rep.line(num(value));
    rep.record(Json{{"record", "distance"}, {"kind", kind}, {"value", value}});
    rep.write(std::cout, true);
    return ok;
}

// ---------------------------------------------------------------- dilation
struct DilationArgs {
    std::string map;
    std::string at = "1";
};

int run_dilation(const Common& c, const DilationArgs& a) {
    if (!a.map.empty()) {
        Tolerances t;
        if (c.tol) {
            t.limit = *c.tol;
        }
        const DiscMap g = parse_disc_map(a.map);
        const BoundaryPoint sigma(parse_complex(a.at));
        if (c.csv) {
            csv_header(std::cout);
            for (int k = LimitOptions{}.k_min; k <= LimitOptions{}.k_max; ++k) {
                const DiscPoint z = DiscPoint::radial(sigma.value(), schedule_defect(k));
                csv_row(std::cout, k, g(z).boundary_distance() / z.boundary_distance());
            }
            return ok;
        }
        LimitOptions o;
        o.tolerance = t.limit;
        const DilationEstimate d = dilation_disc_estimate(g, sigma, o);
        Report rep("dilation", c.json, c.seed.value_or(1), t);
        rep.line("dilation of " + a.map + " at " + cnum(sigma.value()) + ": " + est(d.value) + " (" +
                 std::string(to_string(d.estimate.status)) + ")");
        rep.record(Json{{"record", "dilation"},
                        {"map", a.map},
                        {"at", format_complex(sigma.value())},
                        {"value", format_double(d.value)},
                        {"status", to_string(d.estimate.status)}});
        const bool pass = d.estimate.converged() || d.estimate.infinite() || d.flat_target;
        rep.write(std::cout, pass);
        return pass ? ok : assertion;
    }
    Scenario s = load(c);
    if (c.tol) {
        s.tolerances.limit = *c.tol;
    }
    const ComplexGeodesic g = resolve_geodesic(s);
    Report rep("dilation", c.json, s.seed, s.tolerances);
    const double l1 = phi_dilation(s.map.component(0), g);
    const double l2 = phi_dilation(s.map.component(1), g);
    rep.line("scenario " + s.name);
    rep.line("lambda_g = " + est(g.lambda_g()));
    rep.line("lambda = " + pair(l1, l2));
    rep.record(Json{{"record", "dilation"},
                    {"scenario", s.name},
                    {"lambda_g", format_double(g.lambda_g())},
                    {"lambda1", format_double(l1)},
                    {"lambda2", format_double(l2)}});
    rep.write(std::cout, true);
    return ok;
}

// ---------------------------------------------------------------- busemann
struct BusemannArgs {
    std::string at;
};

int run_busemann(const Common& c, const BusemannArgs& a) {
    Scenario s = load(c);
    if (a.at.empty()) {
        fail(ErrorCode::invalid_argument, "--at z1,z2 is required");
    }
    const ComplexGeodesic g = resolve_geodesic(s);
    const BidiscPoint p = parse_bidisc_point(a.at);
    if (c.csv) {
        const BidiscPoint origin = g.point(DiscPoint(Complex{}));
        csv_header(std::cout);
        for (int k = LimitOptions{}.k_min; k <= LimitOptions{}.k_max; ++k) {
            const BidiscPoint w = g.ray(schedule_defect(k));
            csv_row(std::cout, k, kobayashi_distance(p, w) - kobayashi_distance(origin, w));
        }
        return ok;
    }
    const double agreement = c.tol.value_or(1e-6);
    const double closed = busemann_closed_form(g, p);
    const LimitEstimate e = busemann_limit(g, p);
    const bool pass = e.converged() && std::abs(e.value - closed) <= agreement;
    Report rep("busemann", c.json, s.seed, s.tolerances);
    rep.line("scenario " + s.name + "; point " + pair(p.z1.value(), p.z2.value()));
    rep.line("closed form " + est(closed) + "; limit form " + est(e.value) + " (" + std::string(to_string(e.status)) + ")");
    Json radii = Json::array();
    for (const double R : s.radii) {
        const bool inside = BusemannSublevel::of_geodesic(g, R).contains(p);
        rep.line("R = " + est(R) + ": " + (inside ? "inside" : "outside"));
        radii.push_back(Json{{"R", R}, {"inside", inside}});
    }
    rep.record(Json{{"record", "busemann"},
                    {"scenario", s.name},
                    {"point", {format_complex(p.z1.value()), format_complex(p.z2.value())}},
                    {"closed", format_double(closed)},
                    {"limit", format_double(e.value)},
                    {"status", to_string(e.status)},
                    {"sublevels", radii}});
    rep.write(std::cout, pass);
    return pass ? ok : assertion;
}

// ---------------------------------------------------------------- julia
int run_julia(const Common& c) {
    Scenario s = load(c);
    if (c.tol) {
        s.tolerances.containment = *c.tol;
    }
    const ComplexGeodesic g = resolve_geodesic(s);
    const JuliaCertificate cert = verify_julia(s.map, g, s.radii, s.samples, s.seed, s.tolerances.containment);
    Report rep("julia", c.json, s.seed, s.tolerances);
    rep.line("scenario " + s.name);
    rep.line("x = " + pair(cert.x.x1(), cert.x.x2()) + "; y = " + pair(cert.y.x1(), cert.y.x2()));
    rep.line("lambda = " + pair(cert.lambda[0], cert.lambda[1]) + "; lambda_g = " + est(cert.lambda_g));
    rep.line("       R    samples  violations  worst slack");
    Json rows = Json::array();
    for (const RadiusReport& r : cert.radii) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%8s %10zu %11zu  %s", est(r.R).c_str(), r.samples, r.violations,
                      est(r.worst_slack).c_str());
        rep.line(buf);
        rows.push_back(Json{{"R", r.R}, {"samples", r.samples}, {"violations", r.violations},
                            {"worst_slack", format_double(r.worst_slack)}});
    }
    rep.line(cert.pass() ? "PASS" : "FAIL");
    rep.record(Json{{"record", "julia"},
                    {"scenario", s.name},
                    {"x", {format_complex(cert.x.x1()), format_complex(cert.x.x2())}},
                    {"y", {format_complex(cert.y.x1()), format_complex(cert.y.x2())}},
                    {"lambda", {format_double(cert.lambda[0]), format_double(cert.lambda[1])}},
                    {"lambda_g", format_double(cert.lambda_g)},
                    {"radii", rows},
                    {"violations", cert.violations}});
    rep.write(std::cout, cert.pass());
    return cert.pass() ? ok : assertion;
}

// ---------------------------------------------------------------- jwc
int run_jwc(const Common& c) {
    Scenario s = load(c);
    if (c.tol) {
        s.tolerances.ratio = *c.tol;
    }
    const ComplexGeodesic g = resolve_geodesic(s);
    const ProjectionDevice dev = resolve_device(s, g);
    std::vector<XCurve> curves;
    for (XCurve& curve : resolve_curves(s, g)) {
        if (is_admissible(curve, dev)) {
            curves.push_back(std::move(curve));
        }
    }
    if (curves.empty()) {
        fail(ErrorCode::curve_not_admissible, "no admissible curve in the family");
    }
    const JwcReport jr = jwc_ratios(s.map, dev, curves);
    const JwcCurveReport& first = jr.curves.front();
    Report rep("jwc", c.json, s.seed, s.tolerances);
    rep.line("scenario " + s.name + "; lambda = " + pair(jr.target.lambda[0], jr.target.lambda[1]) +
             "; lambda_g = " + est(jr.lambda_g));
    rep.line("ratios " + cnum(first.first[0].value) + ", " + cnum(first.first[1].value) + " vs expected " +
             est(jr.expected_first[0]) + ", " + est(jr.expected_first[1]));
    rep.line("second ratios " + cnum(first.second[0].value) + ", " + cnum(first.second[1].value) + " vs expected " +
             est(jr.expected_second[0]) + ", " + est(jr.expected_second[1]));
    rep.line("admissible curves " + std::to_string(curves.size()) + "; max deviation " + est(jr.worst_deviation()) +
             "; max quotient deviation " + est(jr.worst_quotient_deviation()));
    bool pass = jr.worst_deviation() <= s.tolerances.ratio && jr.worst_quotient_deviation() <= s.tolerances.ratio;
    Json kg = Json::array();
    for (int j = 0; j < 2; ++j) {
        const BidiscFunction h = jwc_first_ratio(s.map, j, jr.target, dev);
        for (const KgBoundRow& row : kg_bound_check(h, g, s.koranyi_M, jr.target.lambda[j], 20000, s.seed + j)) {
            rep.line("K_g bound f" + std::to_string(j + 1) + ", M = " + est(row.M) + ": sup " + est(row.observed_sup) +
                     " <= " + est(row.bound) + (row.pass ? "" : "  FAIL"));
            kg.push_back(Json{{"component", j + 1},
                              {"M", row.M},
                              {"accepted", row.accepted},
                              {"sup", format_double(row.observed_sup)},
                              {"bound", format_double(row.bound)},
                              {"pass", row.pass}});
            pass = pass && row.pass;
        }
    }
    Json rows = Json::array();
    for (const JwcCurveReport& cr : jr.curves) {
        rows.push_back(Json{{"curve", cr.label},
                            {"first", {format_complex(cr.first[0].value), format_complex(cr.first[1].value)}},
                            {"second", {format_complex(cr.second[0].value), format_complex(cr.second[1].value)}},
                            {"target_distance", format_double(cr.target_distance)}});
    }
    rep.record(Json{{"record", "jwc"},
                    {"scenario", s.name},
                    {"lambda", {format_double(jr.target.lambda[0]), format_double(jr.target.lambda[1])}},
                    {"lambda_g", format_double(jr.lambda_g)},
                    {"expected_first", {format_double(jr.expected_first[0]), format_double(jr.expected_first[1])}},
                    {"expected_second", {format_double(jr.expected_second[0]), format_double(jr.expected_second[1])}},
                    {"max_deviation", format_double(jr.worst_deviation())},
                    {"max_quotient_deviation", format_double(jr.worst_quotient_deviation())},
                    {"curves", rows},
                    {"kg_bound", kg}});
    rep.write(std::cout, pass);
    return pass ? ok : assertion;
}

// ---------------------------------------------------------------- lindelof
int run_lindelof(const Common& c) {
    Scenario s = load(c);
    if (c.tol) {
        s.tolerances.lindelof = *c.tol;
    }
    if (s.test_functions.empty()) {
        s.test_functions = {"first_ratio(1)", "first_ratio(2)", "projection"};
    }
    const ComplexGeodesic g = resolve_geodesic(s);
    const ProjectionDevice dev = resolve_device(s, g);
    const std::vector<XCurve> family = resolve_curves(s, g);
    Report rep("lindelof", c.json, s.seed, s.tolerances);
    rep.line("scenario " + s.name + "; " + std::to_string(family.size()) + " curves");
    bool pass = true;
    for (const std::string& spec : s.test_functions) {
        const BidiscFunction h = make_test_function(spec, s.map, dev);
        const LindelofReport lr = lindelof_check(h, dev, family, s.tolerances.lindelof);
        rep.line(spec + ": limit " + cnum(lr.reference) + " on " + std::to_string(lr.admissible) +
                 " admissible curves; max deviation " + est(lr.worst_admissible_deviation) +
                 "; inadmissible " + est(lr.worst_inadmissible_deviation) +
                 (lr.pass ? "" : lr.admissible < 5 ? "  FAIL (fewer than 5 admissible curves)" : "  FAIL"));
        Json rows = Json::array();
        for (const LindelofCurve& lc : lr.curves) {
            rows.push_back(Json{{"curve", lc.label},
                                {"admissible", lc.admissible},
                                {"limit", format_complex(lc.limit.value)},
                                {"converged", lc.limit.converged()},
                                {"deviation", format_double(lc.deviation)}});
        }
        rep.record(Json{{"record", "lindelof"},
                        {"scenario", s.name},
                        {"function", spec},
                        {"reference", format_complex(lr.reference)},
                        {"reference_curve", lr.reference_curve},
                        {"admissible", lr.admissible},
                        {"max_admissible_deviation", format_double(lr.worst_admissible_deviation)},
                        {"max_inadmissible_deviation", format_double(lr.worst_inadmissible_deviation)},
                        {"pass", lr.pass},
                        {"curves", rows}});
        pass = pass && lr.pass;
    }
    rep.write(std::cout, pass);
    return pass ? ok : assertion;
}

// ---------------------------------------------------------------- dynamics
int run_dynamics(const Common& c) {
    Scenario s = load(c);
    const double cluster_tol = c.tol.value_or(1e-3);
    const HerveClassification hc = classify_herve(s.map);
    const WolffSets sets = wolff_sets(hc);
    const std::vector<TargetCluster> clusters = target_set(s.map, default_seeds(s.seed, 20), 400, cluster_tol);
    double far = 0.0;
    for (const TargetCluster& k : clusters) {
        far = std::max(far, sets.wg.distance(k.center));
    }
    const bool pass = far <= cluster_tol && sets.wg.contains(sets.w);
    Report rep("dynamics", c.json, s.seed, s.tolerances);
    rep.line(std::string(to_string(hc.type)) + " type; W(f)=" + sets.w.to_string() + "; W_G(f)=" + sets.wg.to_string());
    rep.line("cases " + sets.w_case + ", " + sets.wg_case + "; " + std::to_string(clusters.size()) +
             " orbit clusters within " + est(far) + " of W_G(f)");
    if (!sets.note.empty()) {
        rep.line("note: " + sets.note);
    }
    Json centers = Json::array();
    for (const TargetCluster& k : clusters) {
        centers.push_back(Json{{"center", {format_complex(k.center[0]), format_complex(k.center[1])}},
                               {"members", k.members}});
    }
    rep.record(Json{{"record", "dynamics"},
                    {"scenario", s.name},
                    {"type", to_string(hc.type)},
                    {"w_case", sets.w_case},
                    {"wg_case", sets.wg_case},
                    {"W", sets.w.to_string()},
                    {"W_G", sets.wg.to_string()},
                    {"clusters", centers},
                    {"max_cluster_distance", format_double(far)},
                    {"note", sets.note}});
    rep.write(std::cout, pass);
    return pass ? ok : assertion;
}

// ---------------------------------------------------------------- verify
struct VerifyArgs {
    std::string corpus = BIDISC_DEFAULT_CORPUS;
    double scale = 1.0;
    std::vector<int> only;
};

int run_verify(const Common& c, const VerifyArgs& a) {
    VerifyOptions o;
    o.seed = c.seed.value_or(1);
    o.scale = a.scale;
    if (c.tol) {
        o.tolerances.containment = *c.tol;
    }
    const Corpus corpus = load_corpus(a.corpus);
    const VerificationReport report = run_verification(corpus, o, a.only);
    std::cout << (c.json ? machine_output(report) : human_output(report));
    return report.pass() ? ok : assertion;
}

int exit_code(ErrorCode code) {
    switch (code) {
    case ErrorCode::domain:
    case ErrorCode::invalid_argument:
    case ErrorCode::parse: return input;
    case ErrorCode::hypothesis_violated:
    case ErrorCode::curve_not_admissible:
    case ErrorCode::interior_fixed_point: return hypothesis;
    case ErrorCode::not_converged:
    case ErrorCode::no_converged_reference:
    case ErrorCode::ambiguous_slice: return assertion;
    }
    return assertion;
}

} // namespace
} // namespace bidisc::cli

int main(int argc, char** argv) {
    using namespace bidisc::cli;
    CLI::App app{"Hyperbolic geometry of the bidisc and boundary-behaviour certificates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", BIDISC_VERSION_STRING);

    Common common;
    DistanceArgs distance;
    DilationArgs dilation;
    BusemannArgs busemann;
    VerifyArgs verify;

    auto* cmd_distance = app.add_subcommand("distance", "Poincare or Kobayashi distance");
    add_common(cmd_distance, common, false);
    cmd_distance->add_option("--disc", distance.disc, "Two points of the disc")->expected(2);
    cmd_distance->add_option("--bidisc", distance.bidisc, "Two points z1,z2 of the bidisc")->expected(2);

    auto* cmd_dilation = app.add_subcommand("dilation", "Dilation coefficients");
    add_common(cmd_dilation, common);
    cmd_dilation->add_option("--map", dilation.map, "Self-map of the disc, e.g. blaschke(0, 0.5, 1)");
    cmd_dilation->add_option("--at", dilation.at, "Boundary point for --map");
    cmd_dilation->add_flag("--csv", common.csv, "Print the difference quotient as t,value");

    auto* cmd_busemann = app.add_subcommand("busemann", "Busemann function of the scenario geodesic");
    add_common(cmd_busemann, common);
    cmd_busemann->add_option("--at", busemann.at, "Point z1,z2 of the bidisc");
    cmd_busemann->add_flag("--csv", common.csv, "Print K(p,w) - K(0,w) along the ray as t,value");

    auto* cmd_julia = app.add_subcommand("julia", "Julia's lemma certificate");
    add_common(cmd_julia, common);
    auto* cmd_jwc = app.add_subcommand("jwc", "Julia-Wolff-Caratheodory ratios");
    add_common(cmd_jwc, common);
    auto* cmd_lindelof = app.add_subcommand("lindelof", "Lindelof principle on the curve family");
    add_common(cmd_lindelof, common);
    auto* cmd_dynamics = app.add_subcommand("dynamics", "Herve type and Wolff point sets");
    add_common(cmd_dynamics, common);

    auto* cmd_verify = app.add_subcommand("verify", "Run the acceptance suite over a corpus");
    add_common(cmd_verify, common, false);
    cmd_verify->add_option("corpus", verify.corpus, "Corpus directory");
    cmd_verify->add_option("--scale", verify.scale, "Multiplier on every sample count")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--only", verify.only, "Criterion ids to run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : input;
    }

    try {
        if (*cmd_distance) return run_distance(common, distance);
        if (*cmd_dilation) return run_dilation(common, dilation);
        if (*cmd_busemann) return run_busemann(common, busemann);
        if (*cmd_julia) return run_julia(common);
        if (*cmd_jwc) return run_jwc(common);
        if (*cmd_lindelof) return run_lindelof(common);
        if (*cmd_dynamics) return run_dynamics(common);
        if (*cmd_verify) return run_verify(common, verify);
    } catch (const bidisc::Error& e) {
        std::cerr << "bidisc: " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "bidisc: " << e.what() << '\n';
        return input;
    }
    return input;
}
