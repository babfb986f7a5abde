#include "bidisc/verification.hpp"

#include "bidisc/error.hpp"
#include "bidisc/expr_text.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

namespace bidisc {

using Json = nlohmann::ordered_json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorCode::parse, "cannot read " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        fail(ErrorCode::parse, path.string() + ": " + e.what());
    }
}

std::size_t scaled(std::size_t n, const VerifyOptions& o) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(n) * o.scale)));
}

Rng criterion_rng(const VerifyOptions& o, int id) { return Rng(o.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(id)); }

std::uint64_t derived_seed(const VerifyOptions& o, int id, std::uint64_t salt) {
    return o.seed * 1000003ULL + static_cast<std::uint64_t>(id) * 7919ULL + salt;
}

// Half the points uniform by area, half on random radii close to the circle.
DiscPoint mixed_point(Rng& rng) {
    if (rng.uniform() < 0.5) {
        return rng.disc_point(0.999);
    }
    const double defect = std::pow(10.0, -rng.uniform(1.0, 12.0));
    return DiscPoint::radial(std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi)), defect);
}

BidiscPoint mixed_bidisc(Rng& rng) {
    const DiscPoint a = mixed_point(rng);
    const DiscPoint b = mixed_point(rng);
    return BidiscPoint(a, b);
}

void put(CriterionResult& r, const std::string& key, double v) { r.metrics.emplace_back(key, format_double(v)); }
void put(CriterionResult& r, const std::string& key, std::size_t v) { r.metrics.emplace_back(key, std::to_string(v)); }
void put(CriterionResult& r, const std::string& key, const std::string& v) { r.metrics.emplace_back(key, v); }

double relative(double value, double expected) { return std::abs(value - expected) / std::abs(expected); }

CriterionResult start(int id, std::string name) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    return r;
}

void note(CriterionResult& r, const std::string& text) {
    if (!r.detail.empty()) {
        r.detail += "; ";
    }
    r.detail += text;
}

// ---------------------------------------------------------------- 1
CriterionResult geodesic_isometry(const Corpus& corpus, const VerifyOptions& o) {
    CriterionResult r = start(1, "geodesic isometry");
    r.budget = 5.0;
    Rng rng = criterion_rng(o, 1);
    const std::size_t n = scaled(10000, o);
    double worst = 0.0;
    std::string worst_name;
    for (const NamedGeodesic& ng : corpus.geodesics) {
        const ComplexGeodesic g = ng.geodesic();
        for (std::size_t i = 0; i < n; ++i) {
            const DiscPoint z = mixed_point(rng);
            const DiscPoint w = mixed_point(rng);
            const double err = std::abs(kobayashi_distance(g.point(z), g.point(w)) - poincare_distance(z, w));
            if (err > worst) {
                worst = err;
                worst_name = ng.name;
            }
        }
    }
    put(r, "geodesics", corpus.geodesics.size());
    put(r, "pairs_per_geodesic", n);
    put(r, "max_error", worst);
    r.pass = corpus.geodesics.size() >= 10 && worst <= 1e-13;
    if (!r.pass) {
        note(r, corpus.geodesics.size() < 10 ? "fewer than 10 geodesics" : "worst geodesic " + worst_name);
    }
    return r;
}

// ---------------------------------------------------------------- 2
CriterionResult contraction(const Corpus& corpus, const VerifyOptions& o) {
    CriterionResult r = start(2, "Kobayashi contraction");
    r.budget = 10.0;
    Rng rng = criterion_rng(o, 2);
    const std::size_t n = scaled(10000, o);
    double worst = -kInf;
    std::size_t violations = 0;
    std::size_t invalid = 0;
    for (const NamedMap& nm : corpus.maps) {
        if (!validate_self_map(nm.map, scaled(2000, o), derived_seed(o, 2, 0)).pass) {
            ++invalid;
            note(r, nm.name + " is not a self-map");
        }
        for (std::size_t i = 0; i < n; ++i) {
            const BidiscPoint p = mixed_bidisc(rng);
            const BidiscPoint q = mixed_bidisc(rng);
            const double excess = kobayashi_distance(nm.map(p), nm.map(q)) - kobayashi_distance(p, q);
            worst = std::max(worst, excess);
            if (excess > 1e-10) {
                ++violations;
            }
        }
    }
    put(r, "maps", corpus.maps.size());
    put(r, "pairs_per_map", n);
    put(r, "violations", violations);
    put(r, "max_excess", worst);
    r.pass = corpus.maps.size() >= 8 && violations == 0 && invalid == 0;
    return r;
}

// ---------------------------------------------------------------- 3
CriterionResult busemann_closed_form_check(const Corpus& corpus, const VerifyOptions& o) {
    CriterionResult r = start(3, "Busemann closed form");
    Rng rng = criterion_rng(o, 3);
    const std::size_t n = scaled(1000, o);
    std::size_t pairs = 0;
    std::size_t collar = 0;
    std::size_t hard = 0;
    double worst_agreement = 1.0;
    for (const NamedGeodesic& ng : corpus.geodesics) {
        const ComplexGeodesic g = ng.geodesic();
        for (const double R : {0.25, 1.0, 4.0}) {
            ++pairs;
            const BusemannSublevel set = BusemannSublevel::of_geodesic(g, R);
            const BusemannSublevel wide = BusemannSublevel::of_geodesic(g, 2.0 * R);
            const double level = 0.5 * std::log(R);
            std::size_t agree = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const BidiscPoint p = (i % 2 == 0) ? sample_sublevel(wide, rng) : mixed_bidisc(rng);
                const bool closed_in = set.contains(p);
                const LimitEstimate e = busemann_limit(g, p);
                const bool limit_in = e.converged() && e.value <= level;
                if (e.converged() && closed_in == limit_in) {
                    ++agree;
                } else if (e.converged() && std::abs(busemann_closed_form(g, p) - level) <= 1e-6) {
                    ++collar;
                } else {
                    ++hard;
                }
            }
            worst_agreement = std::min(worst_agreement, static_cast<double>(agree) / static_cast<double>(n));
        }
    }
    // Flat points: E, F and the Busemann sublevel coincide.
    std::size_t flat_samples = 0;
    std::size_t flat_collar = 0;
    std::size_t flat_hard = 0;
    std::size_t flat_geodesics = 0;
    for (const NamedGeodesic& ng : corpus.geodesics) {
        const ComplexGeodesic g = ng.geodesic();
        if (std::isfinite(g.lambda_g())) {
            continue;
        }
        ++flat_geodesics;
        const double R = 1.0;
        const BusemannSublevel set = BusemannSublevel::of_geodesic(g, R);
        const BusemannSublevel wide = BusemannSublevel::of_geodesic(g, 2.0 * R);
        for (std::size_t i = 0; i < n; ++i) {
            const BidiscPoint p = (i % 2 == 0) ? sample_sublevel(wide, rng) : mixed_bidisc(rng);
            ++flat_samples;
            const bool b = set.contains(p);
            const bool small = horosphere_estimate(g.x(), R, p, HorosphereMode::small).inside;
            const bool big = horosphere_estimate(g.x(), R, p, HorosphereMode::big).inside;
            if (small == b && big == b) {
                continue;
            }
            if (std::abs(busemann_closed_form(g, p)) <= 1e-6) {
                ++flat_collar;
            } else {
                ++flat_hard;
            }
        }
    }
    put(r, "pairs", pairs);
    put(r, "points_per_pair", n);
    put(r, "min_agreement", worst_agreement);
    put(r, "collar_disagreements", collar);
    put(r, "hard_disagreements", hard);
    put(r, "flat_geodesics", flat_geodesics);
    put(r, "flat_samples", flat_samples);
    put(r, "flat_collar", flat_collar);
    put(r, "flat_hard", flat_hard);
    const double flat_agreement =
        flat_samples == 0 ? 0.0 : 1.0 - static_cast<double>(flat_collar + flat_hard) / static_cast<double>(flat_samples);
    put(r, "flat_agreement", flat_agreement);
    r.pass = worst_agreement >= 0.999 && hard == 0 && flat_geodesics > 0 && flat_hard == 0 && flat_agreement >= 0.999;
    return r;
}

// ---------------------------------------------------------------- 4
CriterionResult dilation_coefficients(const Corpus& corpus, const VerifyOptions&) {
    CriterionResult r = start(4, "dilation coefficients");
    struct Case {
        const char* g;
        Complex sigma;
    };
    const std::vector<Case> cases = {
        {"mobius(0.5, 0)", 1.0},
        {"mobius(0.5, 0)", Complex{0.0, 1.0}},
        {"mobius(0.3+0.2j, 0.7)", std::polar(1.0, 1.1)},
        {"mobius(-0.6j, 2)", std::polar(1.0, -2.3)},
        {"blaschke(0, 0.5, 1, 0.3j, 1)", 1.0},
        {"blaschke(0.4, 0.5, 1, 0.3j, 1)", std::polar(1.0, 2.0)},
        {"blaschke(0, -0.2+0.1j, 2, 0.7, 1)", -1.0},
        {"power(3)", std::polar(1.0, 0.5)},
    };
    double worst = 0.0;
    for (const Case& c : cases) {
        const DiscMap g = parse_disc_map(c.g);
        // The derivative tree evaluated at sigma itself, carried as a point of
        // vanishing gap.
        const double oracle = std::abs(g.jet(DiscPoint::with_gap(c.sigma, 0.0)).d[0]);
        worst = std::max(worst, relative(dilation_disc(g, BoundaryPoint(c.sigma)), oracle));
    }
    put(r, "oracle_cases", cases.size());
    put(r, "max_relative_error", worst);

    const std::vector<std::pair<const char*, const char*>> pairs = {
        {"squares", "diagonal"}, {"h_pair", "diagonal"}, {"diagonal_fold", "square"},
        {"squares", "mobius"},   {"blaschke_mix", "diagonal"}, {"rotated", "diagonal"},
    };
    const std::vector<Complex> centers = {0.3, Complex{0.0, -0.4}, Complex{0.5, 0.2}, -0.6, Complex{0.1, 0.7}};
    double worst_invariance = 0.0;
    std::size_t comparisons = 0;
    for (const auto& [map_name, geo_name] : pairs) {
        const BidiscMap& f = corpus.map(map_name).map;
        const ComplexGeodesic g = corpus.geodesic(geo_name).geodesic();
        for (int j = 0; j < 2; ++j) {
            const double lambda = phi_dilation(f.component(j), g);
            if (!std::isfinite(lambda)) {
                continue;
            }
            for (const Complex a : centers) {
                const Automorphism A = Automorphism::fixing(g.base(), a);
                worst_invariance = std::max(worst_invariance, relative(phi_dilation(f.component(j), g, A), lambda));
                ++comparisons;
            }
        }
    }
    put(r, "reparameterisations", comparisons);
    put(r, "max_invariance_error", worst_invariance);
    r.pass = worst <= 1e-4 && worst_invariance <= 1e-4 && comparisons > 0;
    return r;
}

// ---------------------------------------------------------------- 5
CriterionResult julia_lemma(const Corpus& corpus, const VerifyOptions& o) {
    CriterionResult r = start(5, "Julia's lemma");
    r.budget = 30.0;
    const std::size_t n = scaled(10000, o);
    std::size_t certified = 0;
    std::size_t skipped = 0;
    std::size_t violations = 0;
    std::size_t samples = 0;
    double worst = -kInf;
    std::uint64_t salt = 0;
    for (const NamedMap& nm : corpus.maps) {
        for (const char* geo : {"diagonal", "square", "mobius"}) {
            const ComplexGeodesic g = corpus.geodesic(geo).geodesic();
            try {
                const JuliaCertificate c = verify_julia(nm.map, g, {0.25, 1.0, 4.0}, n, derived_seed(o, 5, salt++), o.tolerances.containment);
                ++certified;
                violations += c.violations;
                worst = std::max(worst, c.worst_slack);
                for (const RadiusReport& row : c.radii) {
                    samples += row.samples;
                }
                if (!c.pass()) {
                    note(r, nm.name + " along " + geo + " has violations");
                }
            } catch (const Error& e) {
                if (e.code() != ErrorCode::hypothesis_violated) {
                    throw;
                }
                ++skipped;
            }
        }
    }
    put(r, "certified_pairs", certified);
    put(r, "hypothesis_skipped", skipped);
    put(r, "samples", samples);
    put(r, "violations", violations);
    put(r, "worst_slack", worst);
    r.pass = violations == 0 && certified > 0;
    return r;
}

// ---------------------------------------------------------------- 6
struct DeviceConfig {
    std::string name;
    ComplexGeodesic geodesic;
    std::vector<ProjectionDevice> devices; // devices[0] is the coordinate device
};

std::vector<DeviceConfig> curve_configs(const Corpus& corpus) {
    std::vector<DeviceConfig> out;
    for (const char* name : {"diagonal", "rotation"}) {
        const ComplexGeodesic g = corpus.geodesic(name).geodesic();
        DeviceConfig c{name, g, {ProjectionDevice::coordinate(g)}};
        for (const Complex a : {Complex{0.0}, Complex{0.25}, Complex{0.5}, Complex{1.0}, Complex{1.0, 1.0} / 3.0}) {
            c.devices.push_back(ProjectionDevice::linear(g, a));
        }
        c.devices.push_back(ProjectionDevice::abate(g));
        out.push_back(std::move(c));
    }
    for (const char* name : {"square", "mobius", "blaschke2", "mix"}) {
        const ComplexGeodesic g = corpus.geodesic(name).geodesic();
        out.push_back({name, g, {ProjectionDevice::coordinate(g)}});
    }
    return out;
}

CriterionResult curve_characterisations(const Corpus& corpus, const VerifyOptions&) {
    CriterionResult r = start(6, "curve characterisations");
    std::size_t curves = 0;
    std::size_t ratio_checks = 0, ratio_agree = 0;
    std::size_t device_checks = 0, device_agree = 0;
    std::size_t perturbation_agree = 0;
    std::size_t koranyi_agree = 0;
    double worst_ratio_error = 0.0;
    std::size_t specials = 0, restricted_count = 0;
    for (const DeviceConfig& cfg : curve_configs(corpus)) {
        const ProjectionDevice& dev = cfg.devices.front();
        const double lambda = cfg.geodesic.lambda_g();
        for (const CurveSpec& spec : standard_family(cfg.geodesic)) {
            const XCurve c = make_curve(cfg.geodesic, spec);
            ++curves;
            const bool special = is_g_special(c, dev).holds;
            const bool restricted = is_g_restricted(c, dev, kAdmissibleAmplitude).holds;
            specials += special;
            restricted_count += restricted;
            if (restricted) {
                ++ratio_checks;
                LimitOptions ratio_options;
                ratio_options.tolerance = 1e-6;
                const ComplexLimit ratio = special_ratio(c, RatioOrder::second_over_first, ratio_options);
                const bool at_lambda = ratio.converged() && std::abs(ratio.value - lambda) <= 1e-4 * lambda;
                if (special && ratio.converged()) {
                    worst_ratio_error = std::max(worst_ratio_error, std::abs(ratio.value - lambda) / lambda);
                }
                if (at_lambda == special) {
                    ++ratio_agree;
                } else {
                    note(r, cfg.name + "/" + c.label() + " ratio verdict differs");
                }
            }
            const bool admissible = special && restricted;
            for (std::size_t d = 1; d < cfg.devices.size(); ++d) {
                ++device_checks;
                if (is_admissible(c, cfg.devices[d]) == admissible) {
                    ++device_agree;
                } else {
                    note(r, cfg.name + "/" + c.label() + " admissibility differs on device " + std::to_string(d));
                }
            }
            const LimitEstimate pert = perturbation_ratio(c, cfg.geodesic);
            if ((pert.converged() && std::abs(pert.value) <= 1e-4) == special) {
                ++perturbation_agree;
            } else {
                note(r, cfg.name + "/" + c.label() + " perturbation criterion differs");
            }
            if (koranyi_eventually(c, dev, kAdmissibleAmplitude).holds == restricted) {
                ++koranyi_agree;
            } else {
                note(r, cfg.name + "/" + c.label() + " Koranyi criterion differs");
            }
        }
    }
    put(r, "configurations", curve_configs(corpus).size());
    put(r, "curves", curves);
    put(r, "special", specials);
    put(r, "restricted", restricted_count);
    put(r, "ratio_agreement", std::to_string(ratio_agree) + "/" + std::to_string(ratio_checks));
    put(r, "device_agreement", std::to_string(device_agree) + "/" + std::to_string(device_checks));
    put(r, "perturbation_agreement", std::to_string(perturbation_agree) + "/" + std::to_string(curves));
    put(r, "koranyi_agreement", std::to_string(koranyi_agree) + "/" + std::to_string(curves));
    put(r, "max_ratio_error", worst_ratio_error);
    r.pass = ratio_agree == ratio_checks && device_agree == device_checks && perturbation_agree == curves &&
             koranyi_agree == curves && worst_ratio_error <= 1e-4 && specials > 0 && specials < curves;
    return r;
}

// ---------------------------------------------------------------- 7
std::vector<XCurve> admissible_curves(const ComplexGeodesic& g, const ProjectionDevice& dev) {
    std::vector<XCurve> out;
    for (const CurveSpec& spec : standard_family(g)) {
        XCurve c = make_curve(g, spec);
        if (is_admissible(c, dev)) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

CriterionResult jwc(const Corpus& corpus, const VerifyOptions& o) {
    CriterionResult r = start(7, "Julia-Wolff-Caratheodory");
    bool ok = true;
    std::uint64_t salt = 0;
    for (const char* name : {"squares", "fold_power", "squares_power"}) {
        const Scenario s = corpus.scenario(name);
        const ComplexGeodesic g = resolve_geodesic(s);
        const ProjectionDevice dev = resolve_device(s, g);
        const std::vector<XCurve> curves = admissible_curves(g, dev);
        const JwcReport rep = jwc_ratios(s.map, dev, curves);
        const std::string tag(name);
        put(r, tag + ".lambda_g", rep.lambda_g);
        put(r, tag + ".lambda", format_double(rep.target.lambda[0]) + "," + format_double(rep.target.lambda[1]));
        put(r, tag + ".expected_first", format_double(rep.expected_first[0]) + "," + format_double(rep.expected_first[1]));
        put(r, tag + ".expected_second", format_double(rep.expected_second[0]) + "," + format_double(rep.expected_second[1]));
        put(r, tag + ".admissible_curves", curves.size());
        put(r, tag + ".max_deviation", rep.worst_deviation());
        put(r, tag + ".max_quotient_deviation", rep.worst_quotient_deviation());
        put(r, tag + ".max_target_distance", rep.worst_target_distance());
        const bool this_ok = curves.size() >= 5 && rep.worst_deviation() <= s.tolerances.ratio &&
                             rep.worst_quotient_deviation() <= s.tolerances.ratio && rep.worst_target_distance() <= 1e-6;
        if (!this_ok) {
            note(r, tag + " outside tolerance");
        }
        ok = ok && this_ok;
        for (int j = 0; j < 2; ++j) {
            const BidiscFunction h = jwc_first_ratio(s.map, j, rep.target, dev);
            for (const KgBoundRow& row :
                 kg_bound_check(h, g, s.koranyi_M, rep.target.lambda[j], scaled(20000, o), derived_seed(o, 7, salt++))) {
                const std::string key = tag + ".kg" + std::to_string(j + 1) + ".M" + format_double(row.M);
                put(r, key + ".sup", row.observed_sup);
                put(r, key + ".bound", row.bound);
                put(r, key + ".accepted", row.accepted);
                if (!row.pass || row.accepted == 0) {
                    ok = false;
                    note(r, key + " bound not confirmed");
                }
            }
        }
    }
    r.pass = ok;
    return r;
}

// ---------------------------------------------------------------- 8
CriterionResult lindelof(const Corpus& corpus, const VerifyOptions& o) {
    CriterionResult r = start(8, "Lindelof principle");
    std::size_t passing = 0;
    std::size_t functions = 0;
    double worst_admissible = 0.0;
    double sensitivity = 0.0;
    bool bounded = true;
    std::uint64_t salt = 0;
    for (const char* name : {"squares", "fold_power"}) {
        const Scenario s = corpus.scenario(name);
        const ComplexGeodesic g = resolve_geodesic(s);
        const ProjectionDevice dev = resolve_device(s, g);
        const std::vector<XCurve> family = resolve_curves(s, g);
        for (const std::string& spec : s.test_functions) {
            ++functions;
            const BidiscFunction h = make_test_function(spec, s.map, dev);
            const LindelofReport rep = lindelof_check(h, dev, family, s.tolerances.lindelof);
            const std::vector<KgBoundRow> rows =
                kg_bound_check(h, g, s.koranyi_M, std::nan(""), scaled(5000, o), derived_seed(o, 8, salt++));
            double sup = 0.0;
            for (const KgBoundRow& row : rows) {
                sup = std::max(sup, row.observed_sup);
            }
            const bool kg_bounded = std::isfinite(sup) && sup < 1e6;
            bounded = bounded && kg_bounded;
            const std::string tag = std::string(name) + "." + spec;
            put(r, tag + ".limit", format_complex(rep.reference));
            put(r, tag + ".admissible", rep.admissible);
            put(r, tag + ".max_admissible_deviation", rep.worst_admissible_deviation);
            put(r, tag + ".max_inadmissible_deviation", rep.worst_inadmissible_deviation);
            put(r, tag + ".koranyi_sup", sup);
            passing += rep.pass && kg_bounded;
            worst_admissible = std::max(worst_admissible, rep.worst_admissible_deviation);
            sensitivity = std::max(sensitivity, rep.worst_inadmissible_deviation);
        }
    }
    put(r, "functions", functions);
    put(r, "passing", passing);
    put(r, "max_admissible_deviation", worst_admissible);
    put(r, "max_inadmissible_deviation", sensitivity);
    r.pass = passing == functions && passing >= 3 && sensitivity > 0.1 && bounded;
    return r;
}

// ---------------------------------------------------------------- 9
CriterionResult dynamics(const Corpus& corpus, const VerifyOptions& o) {
    CriterionResult r = start(9, "Wolff points");
    r.budget = 60.0;
    struct Expectation {
        const char* scenario;
        HerveType type;
        const char* w_case;
        const char* wg_case;
    };
    const Expectation table[] = {
        {"third_type", HerveType::third, "v", "iii"},
        {"first_type", HerveType::first, "ii", "i"},
        {"second_type", HerveType::second, "iii", "ii"},
    };
    bool ok = true;
    const std::vector<double> radii{0.25, 1.0, 4.0};
    const std::size_t samples = scaled(2000, o);
    std::uint64_t salt = 0;
    for (const Expectation& e : table) {
        const Scenario s = corpus.scenario(e.scenario);
        const std::string tag(e.scenario);
        const HerveClassification c = classify_herve(s.map);
        const WolffSets sets = wolff_sets(c);
        put(r, tag + ".type", std::string(to_string(c.type)));
        put(r, tag + ".cases", sets.w_case + "," + sets.wg_case);
        put(r, tag + ".W", sets.w.to_string());
        put(r, tag + ".W_G", sets.wg.to_string());
        bool this_ok = c.type == e.type && sets.w_case == e.w_case && sets.wg_case == e.wg_case;
        this_ok = this_ok && sets.wg.contains(sets.w) && sets.wg.connected();

        const std::vector<TargetCluster> clusters = target_set(s.map, default_seeds(s.seed, 20), 400);
        double far = 0.0;
        for (const TargetCluster& k : clusters) {
            far = std::max(far, sets.wg.distance(k.center));
        }
        put(r, tag + ".clusters", clusters.size());
        put(r, tag + ".max_cluster_distance", far);
        this_ok = this_ok && far <= 1e-3;

        Rng rng = criterion_rng(o, 9).split(salt);
        std::size_t members = 0, members_pass = 0;
        for (const BidiscBoundaryPoint& tau : sample_set(sets.wg, rng, 2)) {
            ++members;
            members_pass += generalized_wolff_test(s.map, tau, radii, samples, derived_seed(o, 9, salt++));
        }
        std::size_t outside = 0, outside_fail = 0;
        while (outside < 5) {
            const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
            const double b = rng.uniform(0.0, 2.0 * std::numbers::pi);
            const double kind = rng.uniform();
            const BidiscBoundaryPoint tau = kind < 1.0 / 3.0 ? BidiscBoundaryPoint(std::polar(1.0, a), std::polar(1.0, b))
                                            : kind < 2.0 / 3.0 ? BidiscBoundaryPoint(std::polar(1.0, a), rng.in_disc(0.9))
                                                               : BidiscBoundaryPoint(rng.in_disc(0.9), std::polar(1.0, b));
            if (sets.wg.distance({tau.x1(), tau.x2()}) <= 0.1) {
                continue;
            }
            ++outside;
            outside_fail += !generalized_wolff_test(s.map, tau, radii, samples, derived_seed(o, 9, salt++));
        }
        const bool repelling_fails =
            !generalized_wolff_test(s.map, BidiscBoundaryPoint(-1.0, -1.0), radii, samples, derived_seed(o, 9, salt++));
        put(r, tag + ".members_passing", std::to_string(members_pass) + "/" + std::to_string(members));
        put(r, tag + ".outside_failing", std::to_string(outside_fail) + "/" + std::to_string(outside));
        put(r, tag + ".repelling_fails", std::string(repelling_fails ? "true" : "false"));
        this_ok = this_ok && members_pass == members && outside_fail == outside && repelling_fails;
        if (!this_ok) {
            note(r, tag + " does not match the expected table");
        }
        ok = ok && this_ok;
    }
    r.pass = ok;
    return r;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

} // namespace

ComplexGeodesic NamedGeodesic::geodesic() const { return ComplexGeodesic::through(spec.g, spec.orientation, BoundaryPoint(base)); }

const NamedMap& Corpus::map(std::string_view name) const {
    for (const NamedMap& m : maps) {
        if (m.name == name) {
            return m;
        }
    }
    fail(ErrorCode::parse, "corpus has no map '" + std::string(name) + "'");
}

const NamedGeodesic& Corpus::geodesic(std::string_view name) const {
    for (const NamedGeodesic& g : geodesics) {
        if (g.name == name) {
            return g;
        }
    }
    fail(ErrorCode::parse, "corpus has no geodesic '" + std::string(name) + "'");
}

Scenario Corpus::scenario(std::string_view name) const {
    return load_scenario(root / "scenarios" / (std::string(name) + ".json"));
}

Corpus load_corpus(const std::filesystem::path& root) {
    Corpus c;
    c.root = root;
    try {
        for (const Json& m : read_json(root / "maps.json")) {
            c.maps.push_back({m.at("name").get<std::string>(),
                              BidiscMap{parse_component(m.at("f1").get<std::string>()),
                                        parse_component(m.at("f2").get<std::string>())}});
        }
        for (const Json& g : read_json(root / "geodesics.json")) {
            NamedGeodesic ng;
            ng.name = g.at("name").get<std::string>();
            ng.spec.g = parse_disc_map(g.at("g").get<std::string>());
            ng.spec.orientation = parse_orientation(g.value("orientation", "first"));
            ng.base = parse_complex(g.value("base", "1"));
            c.geodesics.push_back(std::move(ng));
        }
    } catch (const Json::exception& e) {
        fail(ErrorCode::parse, std::string("bad corpus entry: ") + e.what());
    }
    return c;
}

bool VerificationReport::pass() const {
    return !criteria.empty() && std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass; });
}

const std::vector<std::pair<int, CriterionFn>>& criteria_table() {
    static const std::vector<std::pair<int, CriterionFn>> table = {
        {1, geodesic_isometry}, {2, contraction}, {3, busemann_closed_form_check},
        {4, dilation_coefficients}, {5, julia_lemma}, {6, curve_characterisations},
        {7, jwc}, {8, lindelof}, {9, dynamics},
    };
    return table;
}

VerificationReport run_verification(const Corpus& corpus, const VerifyOptions& options, const std::vector<int>& only) {
    VerificationReport report;
    report.corpus_name = corpus.root.filename().string();
    if (report.corpus_name.empty()) {
        report.corpus_name = corpus.root.parent_path().filename().string();
    }
    report.options = options;
    for (const auto& [id, fn] : criteria_table()) {
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        CriterionResult result;
        try {
            result = fn(corpus, options);
        } catch (const Error& e) {
            result.id = id;
            result.name = "criterion " + std::to_string(id);
            result.pass = false;
            result.detail = std::string(to_string(e.code())) + ": " + e.what();
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (result.budget > 0.0 && options.scale >= 1.0 && result.seconds > result.budget) {
            result.pass = false;
            note(result, "runtime over budget");
        }
        report.criteria.push_back(std::move(result));
    }
    return report;
}

std::string machine_output(const VerificationReport& report) {
    std::string out;
    Json header;
    header["record"] = "header";
    header["tool"] = "bidisc";
    header["version"] = BIDISC_VERSION_STRING;
    header["corpus"] = report.corpus_name;
    header["seed"] = report.options.seed;
    header["scale"] = format_double(report.options.scale);
    header["tolerances"] = {{"limit", format_double(report.options.tolerances.limit)},
                            {"containment", format_double(report.options.tolerances.containment)},
                            {"ratio", format_double(report.options.tolerances.ratio)},
                            {"lindelof", format_double(report.options.tolerances.lindelof)}};
    out += header.dump() + "\n";
    for (const CriterionResult& c : report.criteria) {
        Json j;
        j["record"] = "criterion";
        j["id"] = c.id;
        j["name"] = c.name;
        j["pass"] = c.pass;
        Json metrics = Json::object();
        for (const auto& [k, v] : c.metrics) {
            metrics[k] = v;
        }
        j["metrics"] = std::move(metrics);
        j["detail"] = c.detail;
        out += j.dump() + "\n";
    }
    Json summary;
    summary["record"] = "summary";
    summary["pass"] = report.pass();
    out += summary.dump() + "\n";
    return out;
}

std::string human_output(const VerificationReport& report) {
    std::ostringstream out;
    out << "bidisc " << BIDISC_VERSION_STRING << "  corpus " << report.corpus_name << "  seed " << report.options.seed
        << "  scale " << format_double(report.options.scale) << "\n";
    out << "tolerances: limit " << format_double(report.options.tolerances.limit) << ", containment "
        << format_double(report.options.tolerances.containment) << ", ratio "
        << format_double(report.options.tolerances.ratio) << ", lindelof "
        << format_double(report.options.tolerances.lindelof) << "\n";
    for (const CriterionResult& c : report.criteria) {
        std::string name = c.name;
        name.resize(std::max<std::size_t>(name.size(), 28), ' ');
        out << "[" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << ". " << name << fixed(c.seconds, 2) << " s";
        if (c.budget > 0.0) {
            out << " (budget " << fixed(c.budget, 0) << " s)";
        }
        out << "\n";
        for (const auto& [k, v] : c.metrics) {
            out << "         " << k << " = " << v << "\n";
        }
        if (!c.detail.empty()) {
            out << "         note: " << c.detail << "\n";
        }
    }
    out << (report.pass() ? "ALL PASS" : "FAILURES") << "\n";
    return out.str();
}

} // namespace bidisc
