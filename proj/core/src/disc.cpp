#include "bidisc/disc.hpp"

#include "bidisc/error.hpp"

#include <cfloat>
#include <cmath>
#include <sstream>

namespace bidisc {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::domain: return "domain";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse: return "parse";
    case ErrorCode::not_converged: return "not_converged";
    case ErrorCode::hypothesis_violated: return "hypothesis_violated";
    case ErrorCode::curve_not_admissible: return "curve_not_admissible";
    case ErrorCode::no_converged_reference: return "no_converged_reference";
    case ErrorCode::interior_fixed_point: return "interior_fixed_point";
    case ErrorCode::ambiguous_slice: return "ambiguous_slice";
    }
    return "unknown";
}

namespace {

std::string describe(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "j";
    return os.str();
}

} // namespace

DiscPoint::DiscPoint(Complex z) {
    const double r = std::abs(z);
    if (!std::isfinite(r) || r >= 1.0 - kInteriorMargin) {
        fail(ErrorCode::domain, "point " + describe(z) + " is not strictly inside the unit disc");
    }
    z_ = z;
    gap_ = (1.0 - r) * (1.0 + r);
}

DiscPoint DiscPoint::with_gap(Complex z, double gap) {
    const double r = std::abs(z);
    if (!std::isfinite(r) || !std::isfinite(gap) || gap < 0.0 || r > 1.0 + 1e-12) {
        fail(ErrorCode::domain, "point " + describe(z) + " escaped the unit disc");
    }
    return DiscPoint(z, std::max(gap, DBL_MIN), 0);
}

DiscPoint DiscPoint::radial(Complex direction, double defect) {
    if (!(defect > 0.0) || defect > 1.0) {
        fail(ErrorCode::invalid_argument, "radial defect must lie in (0, 1]");
    }
    return DiscPoint((1.0 - defect) * direction, defect * (2.0 - defect), 0);
}

BoundaryPoint::BoundaryPoint(Complex z) {
    const double r = std::abs(z);
    if (!std::isfinite(r) || std::abs(r - 1.0) > 1e-12) {
        fail(ErrorCode::invalid_argument, "boundary point " + describe(z) + " is not unimodular");
    }
    z_ = z / r;
}

BoundaryPoint BoundaryPoint::from_angle(double radians) {
    return BoundaryPoint(std::polar(1.0, radians));
}

double horocycle_value(const BoundaryPoint& center, const DiscPoint& z) {
    return std::norm(center.value() - z.value()) / z.gap();
}

Horocycle::Horocycle(BoundaryPoint c, double r) : center(c), radius(r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        fail(ErrorCode::invalid_argument, "horocycle radius must be positive and finite");
    }
}

namespace {

// |1 - conj(z) w|^2 = (1-|z|^2)(1-|w|^2) + |z-w|^2, free of cancellation near the circle.
double denominator_sq(const DiscPoint& z, const DiscPoint& w) {
    return z.gap() * w.gap() + std::norm(z.value() - w.value());
}

} // namespace

double pseudo_distance(const DiscPoint& z, const DiscPoint& w) {
    const double num = std::norm(z.value() - w.value());
    if (num == 0.0) {
        return 0.0;
    }
    return std::min(1.0, std::sqrt(num / denominator_sq(z, w)));
}

double poincare_distance(const DiscPoint& z, const DiscPoint& w) {
    const double num = std::norm(z.value() - w.value());
    if (num == 0.0) {
        return 0.0;
    }
    const double den_sq = denominator_sq(z, w);
    const double rho = std::min(1.0, std::sqrt(num / den_sq));
    if (rho < 0.5) {
        return std::atanh(rho);
    }
    // 1 - rho^2 = gap(z) gap(w) / |1 - conj(z) w|^2
    return std::log1p(rho) + 0.5 * (std::log(den_sq) - std::log(z.gap()) - std::log(w.gap()));
}

double stolz_ratio(const BoundaryPoint& vertex, const DiscPoint& z) {
    return std::abs(vertex.value() - z.value()) / z.boundary_distance();
}

bool stolz_contains(const BoundaryPoint& vertex, double amplitude, const DiscPoint& z) {
    if (!(amplitude > 1.0)) {
        fail(ErrorCode::invalid_argument, "Stolz amplitude must exceed 1");
    }
    return stolz_ratio(vertex, z) < amplitude;
}

Automorphism::Automorphism(Complex a, double phase)
    : a_(a), phase_(phase), rotation_(std::polar(1.0, phase)) {
    if (!(std::abs(a) < 1.0)) {
        fail(ErrorCode::invalid_argument, "automorphism centre must lie in the open disc");
    }
}

Automorphism Automorphism::fixing(const BoundaryPoint& fixed, Complex a) {
    const Complex s = fixed.value();
    const Complex rotation = s * (1.0 - std::conj(a) * s) / (s - a);
    return Automorphism(a, std::arg(rotation));
}

DiscPoint Automorphism::operator()(const DiscPoint& z) const {
    const Complex den = 1.0 - std::conj(a_) * z.value();
    const Complex value = rotation_ * (z.value() - a_) / den;
    const double gap = (1.0 - std::norm(a_)) * z.gap() / std::norm(den);
    return DiscPoint::with_gap(value, gap);
}

BoundaryPoint Automorphism::operator()(const BoundaryPoint& z) const {
    const Complex den = 1.0 - std::conj(a_) * z.value();
    return BoundaryPoint(rotation_ * (z.value() - a_) / den);
}

Complex Automorphism::derivative(Complex z) const {
    const Complex den = 1.0 - std::conj(a_) * z;
    return rotation_ * (1.0 - std::norm(a_)) / (den * den);
}

Automorphism Automorphism::inverse() const {
    return Automorphism(-a_ * rotation_, -phase_);
}

} // namespace bidisc
