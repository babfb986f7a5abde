#include "bidisc/bidisc.hpp"

#include "bidisc/error.hpp"
#include "bidisc/limits.hpp"

#include <cmath>
#include <limits>

namespace bidisc {

double distance_from_origin(const DiscPoint& z) {
    const double r = z.modulus();
    if (r < 0.5) {
        return std::atanh(r);
    }
    return std::log1p(std::min(r, 1.0)) - 0.5 * std::log(z.gap());
}

double kobayashi_distance(const BidiscPoint& p, const BidiscPoint& q) {
    return std::max(poincare_distance(p.z1, q.z1), poincare_distance(p.z2, q.z2));
}

BidiscBoundaryPoint::BidiscBoundaryPoint(Complex x1, Complex x2) : x_{x1, x2} {
    for (int j = 0; j < 2; ++j) {
        const double r = std::abs(x_[j]);
        if (!std::isfinite(r) || r > 1.0 + kSilovThreshold) {
            fail(ErrorCode::invalid_argument, "boundary point coordinate outside the closed disc");
        }
        unimodular_[j] = r >= 1.0 - kSilovThreshold;
        if (unimodular_[j]) {
            x_[j] /= r;
        }
    }
    if (!unimodular_[0] && !unimodular_[1]) {
        fail(ErrorCode::invalid_argument, "boundary point of the bidisc needs a unimodular coordinate");
    }
}

std::array<Complex, 2> BidiscBoundaryPoint::silov_part() const noexcept {
    return {unimodular_[0] ? x_[0] : Complex{}, unimodular_[1] ? x_[1] : Complex{}};
}

BoundaryPoint BidiscBoundaryPoint::boundary(int index) const {
    if (!unimodular_[index]) {
        fail(ErrorCode::invalid_argument, "coordinate " + std::to_string(index + 1) + " is not unimodular");
    }
    return BoundaryPoint(x_[index]);
}

DiscPoint scaled_point(Complex x, double s) {
    const double r = std::abs(x);
    if (std::abs(r - 1.0) <= 1e-12) {
        return DiscPoint::radial(x / r, s);
    }
    return DiscPoint((1.0 - s) * x);
}

BidiscPoint radial_point(const BidiscBoundaryPoint& x, double s) {
    return BidiscPoint(scaled_point(x.x1(), s), scaled_point(x.x2(), s));
}

std::string_view to_string(Orientation o) noexcept {
    return o == Orientation::first_identity ? "first" : "second";
}

Orientation parse_orientation(std::string_view text) {
    if (text == "first" || text == "first_identity" || text == "1") {
        return Orientation::first_identity;
    }
    if (text == "second" || text == "second_identity" || text == "2") {
        return Orientation::second_identity;
    }
    fail(ErrorCode::parse, "unknown orientation '" + std::string(text) + "'");
}

namespace {

constexpr double kProbeDefect = 0x1.0p-40;

BidiscBoundaryPoint assemble(Orientation o, Complex id_value, Complex partner) {
    return o == Orientation::first_identity ? BidiscBoundaryPoint(id_value, partner)
                                            : BidiscBoundaryPoint(partner, id_value);
}

} // namespace

ComplexGeodesic::ComplexGeodesic(DiscMap g, Orientation o, BidiscBoundaryPoint x)
    : g_(std::move(g)), orientation_(o), x_(x), lambda_g_(std::numeric_limits<double>::infinity()) {
    if (x_.unimodular(partner_index())) {
        lambda_g_ = dilation_disc(g_, base());
    }
}

ComplexGeodesic ComplexGeodesic::through(DiscMap g, Orientation orientation, BoundaryPoint base) {
    LimitOptions opts;
    opts.tolerance = 1e-12;
    const ComplexLimit lim = radial_limit_complex(
        [&](double s) { return g(DiscPoint::radial(base.value(), s)).value(); }, opts);
    Complex partner = lim.converged() ? lim.value : g(DiscPoint::radial(base.value(), kProbeDefect)).value();
    if (std::abs(partner) > 1.0) {
        partner /= std::abs(partner);
    }
    return ComplexGeodesic(std::move(g), orientation, assemble(orientation, base.value(), partner));
}

ComplexGeodesic ComplexGeodesic::make(DiscMap g, Orientation orientation, BidiscBoundaryPoint x) {
    const int id = orientation == Orientation::first_identity ? 0 : 1;
    const BoundaryPoint base = x.boundary(id);
    const Complex probe = g(DiscPoint::radial(base.value(), kProbeDefect)).value();
    if (std::abs(probe - x[1 - id]) > 1e-6) {
        fail(ErrorCode::invalid_argument, "geodesic map does not reach the partner coordinate of x");
    }
    return ComplexGeodesic(std::move(g), orientation, x);
}

BidiscPoint ComplexGeodesic::point(const DiscPoint& z) const {
    const DiscPoint w = g_(z);
    return orientation_ == Orientation::first_identity ? BidiscPoint(z, w) : BidiscPoint(w, z);
}

std::string_view to_string(DeviceKind k) noexcept {
    switch (k) {
    case DeviceKind::coordinate: return "coordinate";
    case DeviceKind::linear: return "linear";
    case DeviceKind::abate: return "abate";
    }
    return "unknown";
}

namespace {

// zeta with g(u) = zeta u, when g is a rotation.
std::optional<Complex> rotation_of(const DiscMap& g) {
    const Complex probes[3] = {{0.3, 0.0}, {0.0, -0.5}, std::polar(0.7, 1.0)};
    const Complex zeta = g(probes[0]) / probes[0];
    if (std::abs(std::abs(zeta) - 1.0) > 1e-12) {
        return std::nullopt;
    }
    for (const Complex u : probes) {
        if (std::abs(g(u) - zeta * u) > 1e-12) {
            return std::nullopt;
        }
    }
    return zeta;
}

} // namespace

ProjectionDevice ProjectionDevice::coordinate(ComplexGeodesic geodesic) {
    return ProjectionDevice(std::move(geodesic), DeviceKind::coordinate, Complex{1.0, 0.0}, Complex{1.0, 0.0});
}

ProjectionDevice ProjectionDevice::linear(ComplexGeodesic geodesic, Complex a) {
    const auto zeta = rotation_of(geodesic.g());
    if (!zeta) {
        fail(ErrorCode::invalid_argument,
             "linear left inverses exist only for the diagonal geodesic (g a rotation)");
    }
    if (!std::isfinite(std::abs(a))) {
        fail(ErrorCode::invalid_argument, "linear weight must be finite");
    }
    return ProjectionDevice(std::move(geodesic), DeviceKind::linear, a, *zeta);
}

ProjectionDevice ProjectionDevice::abate(ComplexGeodesic geodesic) {
    const auto& x = geodesic.x();
    if (!x.on_silov_boundary()) {
        // d_x = 1: the Silov part only keeps the identity coordinate.
        return ProjectionDevice(std::move(geodesic), DeviceKind::abate, Complex{1.0, 0.0}, Complex{1.0, 0.0});
    }
    const Complex zeta = x[geodesic.partner_index()] * std::conj(x[geodesic.identity_index()]);
    const auto rot = rotation_of(geodesic.g());
    if (!rot || std::abs(*rot - zeta) > 1e-12) {
        fail(ErrorCode::invalid_argument,
             "Abate's left inverse at a Silov point needs the geodesic z -> (z, x2 conj(x1) z)");
    }
    return ProjectionDevice(std::move(geodesic), DeviceKind::abate, Complex{0.5, 0.0}, zeta);
}

DiscPoint ProjectionDevice::left_inverse(const BidiscPoint& p) const {
    const DiscPoint& z = p[geodesic_.identity_index()];
    if (kind_ == DeviceKind::coordinate) {
        return z;
    }
    const DiscPoint& partner = p[geodesic_.partner_index()];
    const Complex w = std::conj(zeta_) * partner.value();
    const Complex zv = z.value();
    if (a_.imag() == 0.0 && a_.real() >= 0.0 && a_.real() <= 1.0) {
        const double t = a_.real();
        const Complex u = t * zv + (1.0 - t) * w;
        const double gap = t * z.gap() + (1.0 - t) * partner.gap() + t * (1.0 - t) * std::norm(zv - w);
        return DiscPoint::with_gap(u, gap);
    }
    const Complex b = 1.0 - a_;
    const Complex u = zv + b * (w - zv);
    const double gap = z.gap() - 2.0 * std::real(std::conj(zv) * b * (w - zv)) - std::norm(b) * std::norm(w - zv);
    if (!(gap > 0.0) || !(std::abs(u) < 1.0)) {
        fail(ErrorCode::domain, "linear left inverse with a non-convex weight left the disc");
    }
    return DiscPoint::with_gap(u, gap);
}

} // namespace bidisc
