#include "bidisc/limits.hpp"

#include "bidisc/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bidisc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double distance_from_origin(const BidiscPoint& p) {
    return std::max(bidisc::distance_from_origin(p.z1), bidisc::distance_from_origin(p.z2));
}

[[noreturn]] void not_converged(const std::string& what, const LimitEstimate& e) {
    fail(ErrorCode::not_converged, what + " did not converge (" + e.diagnostic + ")");
}

} // namespace

DilationEstimate dilation_along(const std::function<DiscPoint(double)>& image, const LimitOptions& options) {
    DilationEstimate out;
    if (image(0x1.0p-40).boundary_distance() > 1e-6) {
        out.flat_target = true;
        out.value = kInf;
        out.estimate.status = LimitStatus::infinite;
        out.estimate.value = kInf;
        out.estimate.diagnostic = "image stays away from the circle";
        return out;
    }
    out.estimate = radial_limit_defect([&](double s) { return image(s).boundary_distance() / s; }, options);
    switch (out.estimate.status) {
    case LimitStatus::converged: out.value = out.estimate.value; break;
    case LimitStatus::infinite: out.value = kInf; break;
    case LimitStatus::not_converged: out.value = out.estimate.value; break;
    }
    return out;
}

DilationEstimate dilation_disc_estimate(const DiscMap& g, const BoundaryPoint& sigma, const LimitOptions& options) {
    return dilation_along([&](double s) { return g(DiscPoint::radial(sigma.value(), s)); }, options);
}

double dilation_disc(const DiscMap& g, const BoundaryPoint& sigma) {
    const DilationEstimate e = dilation_disc_estimate(g, sigma);
    if (e.estimate.status == LimitStatus::not_converged) {
        not_converged("dilation coefficient", e.estimate);
    }
    return e.value;
}

LimitEstimate phi_dilation_log(const BidiscComponent& f, const ComplexGeodesic& geodesic,
                               const std::optional<Automorphism>& reparam) {
    const Complex base = geodesic.base().value();
    return radial_limit_defect([&](double s) {
        DiscPoint z = DiscPoint::radial(base, s);
        if (reparam) {
            z = (*reparam)(z);
        }
        const BidiscPoint q = geodesic.point(z);
        return distance_from_origin(q) - bidisc::distance_from_origin(f(q));
    });
}

double phi_dilation(const BidiscComponent& f, const ComplexGeodesic& geodesic,
                    const std::optional<Automorphism>& reparam) {
    const LimitEstimate e = phi_dilation_log(f, geodesic, reparam);
    if (e.infinite()) {
        return e.value > 0 ? kInf : 0.0;
    }
    if (!e.converged()) {
        not_converged("geodesic dilation coefficient", e);
    }
    return std::exp(2.0 * e.value);
}

double abate_alpha(const BidiscComponent& f, const BidiscBoundaryPoint& x) {
    const LimitEstimate e = radial_limit_defect([&](double s) {
        const BidiscPoint q = radial_point(x, s);
        return distance_from_origin(q) - bidisc::distance_from_origin(f(q));
    });
    if (e.infinite()) {
        return e.value > 0 ? kInf : 0.0;
    }
    if (!e.converged()) {
        not_converged("Abate dilation coefficient", e);
    }
    return std::exp(2.0 * e.value);
}

namespace {

// K(p, w) - K(q, w) stays within K(p, q) of zero, so it cannot diverge; it
// only drifts until w is closer to the circle than p. The schedule runs deep
// enough for the slowest approach (defect s^beta) to pass p's smallest gap.
LimitOptions bounded_difference_options(const BidiscPoint& p, double slowest_beta) {
    LimitOptions o;
    o.divergence_run = std::numeric_limits<int>::max();
    o.log_divergence_run = std::numeric_limits<int>::max();
    const double gap = std::min(p.z1.gap(), p.z2.gap());
    const double depth = (-std::log2(gap) + 24.0) / slowest_beta;
    o.k_max = std::clamp(static_cast<int>(std::ceil(depth)), o.k_max, 400);
    return o;
}

} // namespace

LimitEstimate busemann_limit(const ComplexGeodesic& geodesic, const BidiscPoint& p) {
    const BidiscPoint origin = geodesic.point(DiscPoint(Complex{}));
    return radial_limit_defect(
        [&](double s) {
            const BidiscPoint w = geodesic.ray(s);
            return kobayashi_distance(p, w) - kobayashi_distance(origin, w);
        },
        bounded_difference_options(p, 1.0));
}

double busemann_value(const ComplexGeodesic& geodesic, const BidiscPoint& p) {
    const LimitEstimate e = busemann_limit(geodesic, p);
    if (!e.converged()) {
        not_converged("Busemann function", e);
    }
    return e.value;
}

double busemann_closed_form(const ComplexGeodesic& geodesic, const BidiscPoint& p) {
    const int id = geodesic.identity_index();
    const int partner = geodesic.partner_index();
    double v = horocycle_value(geodesic.base(), p[id]);
    if (std::isfinite(geodesic.lambda_g())) {
        v = std::max(v, horocycle_value(geodesic.x().boundary(partner), p[partner]) / geodesic.lambda_g());
    }
    return 0.5 * std::log(v);
}

BusemannSublevel::BusemannSublevel(BidiscBoundaryPoint center, double R, double lambda1, double lambda2)
    : center_(center), radius_(R), lambda_{lambda1, lambda2} {
    if (!(R > 0.0) || !std::isfinite(R)) {
        fail(ErrorCode::invalid_argument, "sublevel radius must be positive and finite");
    }
    if (!(lambda1 > 0.0) || !(lambda2 > 0.0)) {
        fail(ErrorCode::invalid_argument, "dilation coefficients must be positive");
    }
    const int pivot = std::isfinite(lambda1) ? 0 : (std::isfinite(lambda2) ? 1 : -1);
    if (pivot >= 0) {
        const double scale = lambda_[pivot];
        radius_ = R * scale;
        lambda_[0] /= scale;
        lambda_[1] /= scale;
        lambda_[pivot] = 1.0;
    }
}

BusemannSublevel BusemannSublevel::of_geodesic(const ComplexGeodesic& geodesic, double R) {
    std::array<double, 2> lambda{};
    lambda[geodesic.identity_index()] = 1.0;
    lambda[geodesic.partner_index()] = geodesic.lambda_g();
    return BusemannSublevel(geodesic.x(), R, lambda[0], lambda[1]);
}

bool BusemannSublevel::is_whole_disc(int index) const noexcept {
    return !center_.unimodular(index) || !std::isfinite(lambda_[index]);
}

double BusemannSublevel::level(const BidiscPoint& p) const {
    double level = 0.0;
    for (int j = 0; j < 2; ++j) {
        if (!is_whole_disc(j)) {
            level = std::max(level, horocycle_value(center_.boundary(j), p[j]) / factor_radius(j));
        }
    }
    return level;
}

namespace {

struct Approach {
    double beta1, beta2;
    double tan1, tan2;
};

std::vector<Approach> approach_family(int count) {
    const double t4 = std::tan(std::numbers::pi / 4);
    const double t3 = std::tan(std::numbers::pi / 3);
    const double t6 = std::tan(std::numbers::pi / 6);
    std::vector<Approach> family = {
        {1.0, 1.0, 0.0, 0.0}, {1.0, 0.5, 0.0, 0.0}, {0.5, 1.0, 0.0, 0.0}, {1.0, 2.0, 0.0, 0.0},
        {2.0, 1.0, 0.0, 0.0}, {1.0, 1.0, t4, t4},   {1.0, 1.0, -t4, t6},  {1.0, 1.0, t3, -t3},
    };
    const double extra[] = {t6, -t6, t4, -t4, t3, -t3};
    for (int i = 0; static_cast<int>(family.size()) < count; ++i) {
        const double a = extra[i % 6];
        const double b = extra[(i / 6 + 2 * i + 1) % 6];
        const double beta = (i % 3 == 0) ? 0.5 : (i % 3 == 1 ? 1.0 : 2.0);
        family.push_back({1.0, beta, a, b});
    }
    family.resize(count);
    return family;
}

// y (1 - d (1 + i tan)) with its exact gap 2d - d^2 (1 + tan^2).
DiscPoint approach_point(Complex y, double d, double tan_theta, bool unimodular) {
    if (!unimodular) {
        return DiscPoint((1.0 - d) * y);
    }
    const Complex u = d * Complex{1.0, tan_theta};
    const double gap = 2.0 * d - d * d * (1.0 + tan_theta * tan_theta);
    return DiscPoint::with_gap(y * (1.0 - u), gap);
}

} // namespace

HorosphereVerdict horosphere_estimate(const BidiscBoundaryPoint& y, double R, const BidiscPoint& p,
                                      HorosphereMode mode, int directions) {
    if (directions < 8) {
        fail(ErrorCode::invalid_argument, "horosphere estimates need at least 8 directions");
    }
    if (!(R > 0.0)) {
        fail(ErrorCode::invalid_argument, "horosphere radius must be positive");
    }
    const BidiscPoint origin(Complex{}, Complex{});
    const double threshold = 0.5 * std::log(R);
    HorosphereVerdict out;
    bool unsettled = false;
    for (const Approach& a : approach_family(directions)) {
        const LimitEstimate e = radial_limit_defect(
            [&](double s) {
                const BidiscPoint w(approach_point(y.x1(), std::pow(s, a.beta1), a.tan1, y.unimodular(0)),
                                    approach_point(y.x2(), std::pow(s, a.beta2), a.tan2, y.unimodular(1)));
                return kobayashi_distance(p, w) - kobayashi_distance(origin, w);
            },
            bounded_difference_options(p, std::min(a.beta1, a.beta2)));
        unsettled = unsettled || !e.converged();
        out.directional.push_back(e.value);
    }
    out.estimate = mode == HorosphereMode::small
                       ? *std::max_element(out.directional.begin(), out.directional.end())
                       : *std::min_element(out.directional.begin(), out.directional.end());
    out.inside = out.estimate < threshold;
    out.low_confidence = unsettled || std::abs(out.estimate - threshold) <= 1e-4;
    return out;
}

double koranyi_value(const ComplexGeodesic& geodesic, const BidiscPoint& p, BusemannForm form) {
    const double b = form == BusemannForm::closed ? busemann_closed_form(geodesic, p) : busemann_value(geodesic, p);
    return b + kobayashi_distance(geodesic.point(DiscPoint(Complex{})), p);
}

bool koranyi_contains(const ComplexGeodesic& geodesic, double M, const BidiscPoint& p, BusemannForm form) {
    if (!(M > 1.0)) {
        fail(ErrorCode::invalid_argument, "Koranyi amplitude must exceed 1");
    }
    return koranyi_value(geodesic, p, form) < std::log(M);
}

} // namespace bidisc
