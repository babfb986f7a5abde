#include "bidisc/curves.hpp"

#include "bidisc/error.hpp"
#include "bidisc/expr_text.hpp"

#include <cmath>
#include <numbers>

namespace bidisc {

XCurve::XCurve(BidiscBoundaryPoint target, std::function<BidiscPoint(double)> path, std::string label)
    : target_(target), path_(std::move(path)), label_(std::move(label)) {
    const BidiscPoint probe = path_(0x1.0p-40);
    const double err = std::sqrt(std::norm(probe.z1.value() - target_.x1()) + std::norm(probe.z2.value() - target_.x2()));
    if (!(err <= 1e-4)) {
        fail(ErrorCode::invalid_argument, "curve '" + label_ + "' does not converge to its target");
    }
}

std::string to_string(const CurveSpec& spec) {
    switch (spec.kind) {
    case CurveKind::radial: return "radial";
    case CurveKind::angled: return "angled(" + format_double(spec.parameter) + ")";
    case CurveKind::special_perturbed: return "special_perturbed(" + format_double(spec.parameter) + ")";
    case CurveKind::ratio_controlled: return "ratio_controlled(" + format_double(spec.parameter) + ")";
    case CurveKind::tangential: return "tangential";
    }
    return {};
}

CurveSpec parse_curve_spec(std::string_view text) {
    const auto open = text.find('(');
    const std::string_view name = text.substr(0, open);
    CurveSpec spec;
    if (open == std::string_view::npos) {
        if (name == "radial") {
            spec.kind = CurveKind::radial;
        } else if (name == "tangential") {
            spec.kind = CurveKind::tangential;
        } else {
            fail(ErrorCode::parse, "unknown curve '" + std::string(text) + "'");
        }
        return spec;
    }
    if (text.back() != ')') {
        fail(ErrorCode::parse, "unterminated curve parameter in '" + std::string(text) + "'");
    }
    spec.parameter = parse_double(text.substr(open + 1, text.size() - open - 2));
    if (name == "angled") {
        spec.kind = CurveKind::angled;
    } else if (name == "special_perturbed") {
        spec.kind = CurveKind::special_perturbed;
    } else if (name == "ratio_controlled") {
        spec.kind = CurveKind::ratio_controlled;
    } else {
        fail(ErrorCode::parse, "unknown curve '" + std::string(text) + "'");
    }
    return spec;
}

namespace {

// y (1 - u) with exact gap 2 Re u - |u|^2 for unimodular y.
DiscPoint offset_point(Complex y, Complex u) {
    return DiscPoint::with_gap(y * (1.0 - u), 2.0 * u.real() - std::norm(u));
}

BidiscPoint arrange(const ComplexGeodesic& geodesic, const DiscPoint& id, const DiscPoint& partner) {
    return geodesic.identity_index() == 0 ? BidiscPoint(id, partner) : BidiscPoint(partner, id);
}

} // namespace

XCurve make_curve(const ComplexGeodesic& geodesic, const CurveSpec& spec) {
    const Complex base = geodesic.base().value();
    const Complex xp = geodesic.x()[geodesic.partner_index()];
    const std::string label = to_string(spec);
    const ComplexGeodesic& g = geodesic;
    switch (spec.kind) {
    case CurveKind::radial:
        return XCurve(g.x(), [g](double s) { return g.ray(s); }, label);
    case CurveKind::angled: {
        const double theta = spec.parameter;
        if (!(std::abs(theta) < std::numbers::pi / 2)) {
            fail(ErrorCode::invalid_argument, "angled curves need |theta| < pi/2");
        }
        const double tan_theta = std::tan(theta);
        const double s_max = 0.5 * std::cos(theta) * std::cos(theta);
        return XCurve(g.x(), [g, base, tan_theta, s_max](double s) {
            const double d = std::min(s, s_max);
            return g.point(offset_point(base, d * Complex{1.0, tan_theta}));
        }, label);
    }
    case CurveKind::special_perturbed: {
        const double p = spec.parameter;
        if (!(p > 1.0)) {
            fail(ErrorCode::invalid_argument, "special_perturbed needs a decay exponent > 1");
        }
        return XCurve(g.x(), [g, base, xp, p](double s) {
            const DiscPoint z = DiscPoint::radial(base, s);
            const DiscPoint w = g.g()(z);
            const double e = std::pow(s, p);
            const double gap = w.gap() + 2.0 * std::real(std::conj(w.value()) * xp) * e - std::norm(xp) * e * e;
            return arrange(g, z, DiscPoint::with_gap(w.value() - xp * e, gap));
        }, label);
    }
    case CurveKind::ratio_controlled: {
        const double c = spec.parameter;
        if (!(c > 0.0) || !std::isfinite(c)) {
            fail(ErrorCode::invalid_argument, "ratio_controlled needs a positive ratio");
        }
        if (!g.x().on_silov_boundary()) {
            fail(ErrorCode::invalid_argument, "ratio_controlled curves need a target on the Silov boundary");
        }
        return XCurve(g.x(), [g, base, xp, c](double s) {
            const double d = std::min(c * s, 0.5);
            return arrange(g, DiscPoint::radial(base, s), DiscPoint::radial(xp, d));
        }, label);
    }
    case CurveKind::tangential:
        return XCurve(g.x(), [g, base](double s) {
            return g.point(offset_point(base, std::polar(s, std::numbers::pi / 2 - std::sqrt(s))));
        }, label);
    }
    fail(ErrorCode::invalid_argument, "unknown curve kind");
}

std::vector<CurveSpec> standard_family(const ComplexGeodesic& geodesic) {
    constexpr double pi = std::numbers::pi;
    std::vector<CurveSpec> family = {
        {CurveKind::radial, 0.0},
        {CurveKind::angled, pi / 6},  {CurveKind::angled, -pi / 6},     {CurveKind::angled, pi / 4},
        {CurveKind::angled, -pi / 4}, {CurveKind::angled, pi / 3},      {CurveKind::angled, -pi / 3},
        {CurveKind::angled, pi / 12}, {CurveKind::angled, -5 * pi / 12}, {CurveKind::angled, pi / 5},
        {CurveKind::special_perturbed, 1.5}, {CurveKind::special_perturbed, 2.0},
        {CurveKind::special_perturbed, 3.0}, {CurveKind::special_perturbed, 4.0},
        {CurveKind::tangential, 0.0},
    };
    const double lambda = geodesic.lambda_g();
    if (geodesic.x().on_silov_boundary() && std::isfinite(lambda)) {
        for (const double c : {lambda, 0.5 * lambda, 2.0 * lambda, 0.25 * lambda, 1.5 * lambda}) {
            family.push_back({CurveKind::ratio_controlled, c});
        }
    } else {
        for (const double theta : {pi / 8, -pi / 8, 2 * pi / 5, -pi / 5, pi / 10}) {
            family.push_back({CurveKind::angled, theta});
        }
    }
    return family;
}

Verdict is_g_special(const XCurve& curve, const ProjectionDevice& device, double tolerance) {
    Verdict v;
    // The verdict resolves the limit at the scale of `tolerance`; a finer
    // convergence target would run the schedule into rounding noise, which
    // grows like eps / gap for retractions computed from coordinates.
    LimitOptions o;
    o.tolerance = 0.1 * tolerance;
    v.estimate = radial_limit_defect(
        [&](double s) {
            const BidiscPoint p = curve.at_defect(s);
            return kobayashi_distance(p, device.retraction(p));
        },
        o);
    v.holds = v.estimate.converged() && std::abs(v.estimate.value) <= tolerance;
    return v;
}

namespace {

template <class Inside>
RestrictedVerdict eventually(const LimitOptions& o, Inside&& inside) {
    RestrictedVerdict out;
    int first = -1;
    for (int k = o.k_min; k <= o.k_max; ++k) {
        double ratio = INFINITY;
        bool ok = false;
        try {
            ok = inside(schedule_defect(k), ratio);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::domain) {
                throw;
            }
        }
        if (ok) {
            if (first < 0) {
                first = k;
            }
        } else {
            first = -1;
        }
        if (k >= 40) {
            out.tail_ratio = std::max(out.tail_ratio, ratio);
        }
    }
    out.first_index = first;
    out.holds = first >= 0 && first <= 40;
    return out;
}

} // namespace

RestrictedVerdict is_g_restricted(const XCurve& curve, const ProjectionDevice& device, double M) {
    if (!(M > 1.0)) {
        fail(ErrorCode::invalid_argument, "Stolz amplitude must exceed 1");
    }
    const BoundaryPoint vertex = device.geodesic().base();
    return eventually(LimitOptions{}, [&](double s, double& ratio) {
        const DiscPoint u = device.left_inverse(curve.at_defect(s));
        ratio = stolz_ratio(vertex, u);
        return ratio < M;
    });
}

RestrictedVerdict koranyi_eventually(const XCurve& curve, const ProjectionDevice& device, double M) {
    if (!(M > 1.0)) {
        fail(ErrorCode::invalid_argument, "Koranyi amplitude must exceed 1");
    }
    const double level = std::log(M);
    return eventually(LimitOptions{}, [&](double s, double& ratio) {
        const double value = koranyi_value(device.geodesic(), device.retraction(curve.at_defect(s)));
        ratio = std::exp(value);
        return value < level;
    });
}

bool is_admissible(const XCurve& curve, const ProjectionDevice& device, double M) {
    return is_g_restricted(curve, device, M).holds && is_g_special(curve, device).holds;
}

ComplexLimit special_ratio(const XCurve& curve, RatioOrder order, const LimitOptions& options) {
    const BidiscBoundaryPoint& x = curve.target();
    if (!x.on_silov_boundary()) {
        fail(ErrorCode::invalid_argument, "special_ratio needs a target on the Silov boundary");
    }
    const Complex c1 = std::conj(x.x1());
    const Complex c2 = std::conj(x.x2());
    return radial_limit_complex([&](double s) {
        const BidiscPoint p = curve.at_defect(s);
        const Complex d1 = 1.0 - c1 * p.z1.value();
        const Complex d2 = 1.0 - c2 * p.z2.value();
        return order == RatioOrder::second_over_first ? d2 / d1 : d1 / d2;
    }, options);
}

LimitEstimate perturbation_ratio(const XCurve& curve, const ComplexGeodesic& geodesic) {
    const int id = geodesic.identity_index();
    return radial_limit_defect([&](double s) {
        const BidiscPoint p = curve.at_defect(s);
        const DiscPoint w = geodesic.g()(p[id]);
        return std::abs(p[1 - id].value() - w.value()) / w.boundary_distance();
    });
}

} // namespace bidisc
