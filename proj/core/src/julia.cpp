#include "bidisc/julia.hpp"

#include "bidisc/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace bidisc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ComplexLimit component_limit(const BidiscComponent& fj, const std::function<BidiscPoint(double)>& path) {
    LimitOptions opts;
    opts.tolerance = 1e-10;
    return radial_limit_complex([&](double s) { return fj(path(s)).value(); }, opts);
}

} // namespace

BidiscBoundaryPoint JuliaTarget::point() const { return BidiscBoundaryPoint(y[0], y[1]); }

JuliaTarget julia_target(const BidiscMap& f, const ComplexGeodesic& geodesic) {
    JuliaTarget out;
    for (int j = 0; j < 2; ++j) {
        const BidiscComponent& fj = f.component(j);
        const LimitEstimate log_lambda = phi_dilation_log(fj, geodesic);
        if (log_lambda.infinite()) {
            out.lambda[j] = log_lambda.value > 0 ? kInf : 0.0;
        } else if (log_lambda.converged()) {
            out.lambda[j] = std::exp(2.0 * log_lambda.value);
        } else {
            fail(ErrorCode::not_converged, "dilation of component " + std::to_string(j + 1) +
                                               " along the geodesic did not converge (" + log_lambda.diagnostic + ")");
        }
        const ComplexLimit lim = component_limit(fj, [&](double s) { return geodesic.ray(s); });
        Complex yj = lim.converged() ? lim.value : fj(geodesic.ray(0x1.0p-40)).value();
        out.determined[j] = std::isfinite(out.lambda[j]);
        if (out.determined[j]) {
            if (std::abs(std::abs(yj) - 1.0) > 1e-6) {
                fail(ErrorCode::hypothesis_violated, "component " + std::to_string(j + 1) +
                                                         " has a finite dilation but an interior radial limit");
            }
            yj /= std::abs(yj);
        } else if (std::abs(yj) >= 1.0 - kSilovThreshold) {
            // Keep unconstrained coordinates strictly inside so they never count as unimodular.
            yj *= (1.0 - 2.0 * kSilovThreshold) / std::abs(yj);
        }
        out.y[j] = yj;
    }
    if (!out.determined[0] && !out.determined[1]) {
        fail(ErrorCode::hypothesis_violated, "both dilation coefficients along the geodesic are infinite");
    }
    return out;
}

namespace {

DiscPoint sample_horodisc(Complex sigma, double R, Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double mode = rng.uniform();
        double rho;
        double theta;
        if (mode < 0.4) {
            rho = std::sqrt(rng.uniform());
            theta = rng.uniform(-std::numbers::pi, std::numbers::pi);
        } else if (mode < 0.7) {
            rho = 1.0 - std::pow(10.0, -1.0 - 9.0 * rng.uniform());
            theta = rng.uniform(-std::numbers::pi, std::numbers::pi);
        } else {
            rho = 1.0 - std::pow(10.0, -1.0 - 9.0 * rng.uniform());
            theta = (rng.uniform() < 0.5 ? -1.0 : 1.0) * std::numbers::pi * std::pow(10.0, -6.0 * rng.uniform());
        }
        const double sin_half = std::sin(0.5 * theta);
        const double scale = 1.0 + R;
        const double gap =
            (2.0 * R * ((1.0 - rho) + 2.0 * rho * sin_half * sin_half) + R * R * (1.0 - rho) * (1.0 + rho)) /
            (scale * scale);
        const Complex value = sigma * (1.0 + R * std::polar(rho, theta)) / scale;
        const DiscPoint z = DiscPoint::with_gap(value, gap);
        if (z.boundary_distance() >= 1e-10) {
            return z;
        }
    }
    fail(ErrorCode::invalid_argument, "could not sample the horodisc away from the circle");
}

} // namespace

BidiscPoint sample_sublevel(const BusemannSublevel& set, Rng& rng) {
    DiscPoint coords[2];
    for (int j = 0; j < 2; ++j) {
        if (set.is_whole_disc(j)) {
            coords[j] = DiscPoint(rng.in_disc(1.0 - 1e-10));
        } else {
            coords[j] = sample_horodisc(set.center()[j], set.factor_radius(j), rng);
        }
    }
    return BidiscPoint(coords[0], coords[1]);
}

RadiusReport check_containment(const BidiscMap& f, const BusemannSublevel& source, const BusemannSublevel& target,
                               std::size_t samples, Rng& rng, double tolerance) {
    RadiusReport out;
    out.R = source.radius();
    for (std::size_t i = 0; i < samples; ++i) {
        const BidiscPoint p = sample_sublevel(source, rng);
        ++out.samples;
        double slack = -kInf;
        try {
            const BidiscPoint q = f(p);
            for (int j = 0; j < 2; ++j) {
                if (!target.is_whole_disc(j)) {
                    slack = std::max(slack, horocycle_value(target.center().boundary(j), q[j]) - target.factor_radius(j));
                }
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::domain) {
                throw;
            }
            slack = kInf;
        }
        out.worst_slack = std::max(out.worst_slack, slack);
        if (slack > tolerance) {
            ++out.violations;
        }
    }
    return out;
}

JuliaCertificate verify_julia(const BidiscMap& f, const ComplexGeodesic& geodesic, const std::vector<double>& radii,
                              std::size_t samples_per_radius, std::uint64_t seed, double tolerance) {
    const JuliaTarget target = julia_target(f, geodesic);
    JuliaCertificate cert{geodesic.x(), target.point(), target.lambda, geodesic.lambda_g(), {}, 0, -kInf};
    Rng root(seed);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        Rng rng = root.split(i);
        const BusemannSublevel source = BusemannSublevel::of_geodesic(geodesic, radii[i]);
        const BusemannSublevel image(cert.y, radii[i], target.lambda[0], target.lambda[1]);
        RadiusReport row = check_containment(f, source, image, samples_per_radius, rng, tolerance);
        row.R = radii[i];
        cert.violations += row.violations;
        cert.worst_slack = std::max(cert.worst_slack, row.worst_slack);
        cert.radii.push_back(row);
    }
    return cert;
}

BidiscFunction jwc_first_ratio(const BidiscMap& f, int j, const JuliaTarget& target, const ProjectionDevice& device) {
    const Complex cy = std::conj(target.y[j]);
    const Complex cx = std::conj(device.geodesic().base().value());
    const BidiscComponent fj = f.component(j);
    return {"(1 - conj(y" + std::to_string(j + 1) + ") f" + std::to_string(j + 1) + ") / (1 - conj(x) pi)",
            [=](const BidiscPoint& p) {
                return (1.0 - cy * fj(p).value()) / (1.0 - cx * device.left_inverse(p).value());
            }};
}

BidiscFunction jwc_second_ratio(const BidiscMap& f, int j, const JuliaTarget& target, const ProjectionDevice& device) {
    const int partner = device.geodesic().partner_index();
    if (!device.geodesic().x().unimodular(partner)) {
        fail(ErrorCode::hypothesis_violated, "the second JWC ratio needs a unimodular partner coordinate");
    }
    const Complex cy = std::conj(target.y[j]);
    const Complex cx = std::conj(device.geodesic().x()[partner]);
    const BidiscComponent fj = f.component(j);
    return {"(1 - conj(y" + std::to_string(j + 1) + ") f" + std::to_string(j + 1) + ") / (1 - conj(x" +
                std::to_string(partner + 1) + ") z" + std::to_string(partner + 1) + ")",
            [=](const BidiscPoint& p) { return (1.0 - cy * fj(p).value()) / (1.0 - cx * p[partner].value()); }};
}

double JwcReport::worst_deviation() const {
    double worst = 0.0;
    for (const auto& c : curves) {
        for (int j = 0; j < 2; ++j) {
            worst = std::max({worst, c.first_deviation[j], c.second_deviation[j]});
        }
    }
    return worst;
}

double JwcReport::worst_quotient_deviation() const {
    double worst = 0.0;
    for (const auto& c : curves) {
        worst = std::max({worst, c.quotient_deviation[0], c.quotient_deviation[1]});
    }
    return worst;
}

double JwcReport::worst_target_distance() const {
    double worst = 0.0;
    for (const auto& c : curves) {
        worst = std::max(worst, c.target_distance);
    }
    return worst;
}

namespace {

double relative_deviation(const ComplexLimit& lim, double expected) {
    if (!lim.converged()) {
        return kInf;
    }
    return std::abs(lim.value - expected) / std::abs(expected);
}

} // namespace

JwcReport jwc_ratios(const BidiscMap& f, const ProjectionDevice& device, const std::vector<XCurve>& curves) {
    const ComplexGeodesic& geodesic = device.geodesic();
    JwcReport report;
    report.target = julia_target(f, geodesic);
    report.lambda_g = geodesic.lambda_g();
    if (!std::isfinite(report.lambda_g)) {
        fail(ErrorCode::hypothesis_violated, "JWC limits need a finite dilation coefficient of the geodesic");
    }
    for (int j = 0; j < 2; ++j) {
        if (!report.target.determined[j]) {
            fail(ErrorCode::hypothesis_violated, "JWC limits need finite dilation of every component");
        }
        report.expected_first[j] = report.target.lambda[j] * std::min(1.0, report.lambda_g);
        report.expected_second[j] = report.target.lambda[j] / std::max(1.0, report.lambda_g);
    }
    for (const XCurve& curve : curves) {
        if (!is_admissible(curve, device)) {
            fail(ErrorCode::curve_not_admissible, "curve '" + curve.label() + "' is not g-special and g-restricted");
        }
    }
    for (const XCurve& curve : curves) {
        JwcCurveReport row;
        row.label = curve.label();
        const auto path = [&](double s) { return curve.at_defect(s); };
        for (int j = 0; j < 2; ++j) {
            const BidiscFunction first = jwc_first_ratio(f, j, report.target, device);
            const BidiscFunction second = jwc_second_ratio(f, j, report.target, device);
            row.first[j] = radial_limit_complex([&](double s) { return first.eval(path(s)); });
            row.second[j] = radial_limit_complex([&](double s) { return second.eval(path(s)); });
            const ComplexLimit fl = component_limit(f.component(j), path);
            row.f_limit[j] = fl.value;
            row.target_distance = std::max(row.target_distance, fl.converged() ? std::abs(fl.value - report.target.y[j]) : kInf);
            row.first_deviation[j] = relative_deviation(row.first[j], report.expected_first[j]);
            row.second_deviation[j] = relative_deviation(row.second[j], report.expected_second[j]);
            row.quotient_deviation[j] =
                row.first[j].converged() && row.second[j].converged()
                    ? std::abs(row.first[j].value / row.second[j].value - report.lambda_g) / report.lambda_g
                    : kInf;
        }
        report.curves.push_back(std::move(row));
    }
    return report;
}

double c_g(const ComplexGeodesic& geodesic) {
    const double r = std::abs(geodesic.g()(Complex{}));
    return (1.0 + r) / (1.0 - r);
}

std::vector<KgBoundRow> kg_bound_check(const BidiscFunction& h, const ComplexGeodesic& geodesic,
                                       const std::vector<double>& M_list, double bound_lambda, std::size_t proposals,
                                       std::uint64_t seed) {
    std::vector<KgBoundRow> rows;
    for (const double M : M_list) {
        KgBoundRow row;
        row.M = M;
        row.bound = 2.0 * bound_lambda * M * M * c_g(geodesic);
        rows.push_back(row);
    }
    Rng rng(seed);
    const Complex base = geodesic.base().value();
    for (std::size_t i = 0; i < proposals; ++i) {
        BidiscPoint p;
        if (rng.uniform() < 0.6) {
            // Near the geodesic, close to the vertex.
            const double d = std::pow(10.0, -1.0 - 8.0 * rng.uniform());
            const double tau = rng.uniform(-3.0, 3.0);
            const Complex u = d * Complex{1.0, tau};
            const DiscPoint z = DiscPoint::with_gap(base * (1.0 - u), 2.0 * d - std::norm(u));
            const DiscPoint w = geodesic.g()(z);
            const Complex shift = std::polar(2.0 * rng.uniform() * w.boundary_distance(), rng.uniform(0.0, 2.0 * std::numbers::pi));
            const Complex moved = w.value() + shift;
            if (!(std::abs(moved) < 1.0 - 1e-15)) {
                continue;
            }
            const DiscPoint partner(moved);
            p = geodesic.identity_index() == 0 ? BidiscPoint(z, partner) : BidiscPoint(partner, z);
        } else {
            p = BidiscPoint(rng.disc_point(0.999), rng.disc_point(0.999));
        }
        Complex value;
        try {
            value = h.eval(p);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::domain) {
                throw;
            }
            continue;
        }
        for (auto& row : rows) {
            if (koranyi_contains(geodesic, row.M, p)) {
                ++row.accepted;
                row.observed_sup = std::max(row.observed_sup, std::abs(value));
            }
        }
    }
    for (auto& row : rows) {
        row.pass = std::isnan(row.bound) || row.observed_sup <= row.bound;
    }
    return rows;
}

LindelofReport lindelof_check(const BidiscFunction& h, const ProjectionDevice& device,
                              const std::vector<XCurve>& family, double tolerance) {
    LindelofReport report;
    report.function = h.name;
    bool have_reference = false;
    for (const XCurve& curve : family) {
        LindelofCurve row;
        row.label = curve.label();
        row.admissible = is_admissible(curve, device);
        row.limit = radial_limit_complex([&](double s) { return h.eval(curve.at_defect(s)); });
        if (row.admissible && !have_reference && row.limit.converged()) {
            have_reference = true;
            report.reference = row.limit.value;
            report.reference_curve = row.label;
        }
        report.curves.push_back(std::move(row));
    }
    if (!have_reference) {
        fail(ErrorCode::no_converged_reference, "no admissible curve produced a converged limit for " + h.name);
    }
    for (auto& row : report.curves) {
        row.deviation = row.limit.converged() ? std::abs(row.limit.value - report.reference) : kInf;
        if (row.admissible) {
            ++report.admissible;
            report.worst_admissible_deviation = std::max(report.worst_admissible_deviation, row.deviation);
        } else {
            report.worst_inadmissible_deviation = std::max(report.worst_inadmissible_deviation, row.deviation);
        }
    }
    report.pass = report.admissible >= 5 && report.worst_admissible_deviation <= tolerance;
    return report;
}

} // namespace bidisc
