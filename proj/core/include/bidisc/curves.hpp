#pragma once

// Curves converging to boundary points of the bidisc, their generators, and
// the admissibility predicates (g-special, g-restricted).

#include "bidisc/limits.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bidisc {

/// A curve in the bidisc converging to `target`. Paths are parameterised by
/// the defect s = 1 - t so they can be evaluated at t = 1 - 2^-48.
class XCurve {
public:
    /// Checks that the path at s = 2^-40 is within 1e-4 of the target.
    XCurve(BidiscBoundaryPoint target, std::function<BidiscPoint(double)> path, std::string label);

    BidiscPoint at_defect(double s) const { return path_(s); }
    BidiscPoint operator()(double t) const { return path_(1.0 - t); }
    const BidiscBoundaryPoint& target() const noexcept { return target_; }
    const std::string& label() const noexcept { return label_; }

private:
    BidiscBoundaryPoint target_;
    std::function<BidiscPoint(double)> path_;
    std::string label_;
};

enum class CurveKind { radial, angled, special_perturbed, ratio_controlled, tangential };

struct CurveSpec {
    CurveKind kind = CurveKind::radial;
    double parameter = 0.0; // angle, decay exponent or ratio

    friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

std::string to_string(const CurveSpec& spec);
CurveSpec parse_curve_spec(std::string_view text);

/// Builds a curve toward the geodesic's boundary point in the geodesic frame:
///  radial               phi(t x_id)
///  angled(theta)        z_id = x_id (1 - s (1 + i tan theta)), partner g(z_id)
///  special_perturbed(p) partner g(z_id) - x_partner s^p on the radial z_id (p > 1)
///  ratio_controlled(c)  partner x_partner (1 - c s) on the radial z_id (c > 0)
///  tangential           z_id = x_id (1 - s e^{i (pi/2 - sqrt s)}), partner g(z_id)
XCurve make_curve(const ComplexGeodesic& geodesic, const CurveSpec& spec);

/// Twenty curves mixing admissible and inadmissible kinds.
std::vector<CurveSpec> standard_family(const ComplexGeodesic& geodesic);

struct Verdict {
    bool holds = false;
    LimitEstimate estimate;
};

/// lim K(sigma, retraction(sigma)) <= tolerance.
Verdict is_g_special(const XCurve& curve, const ProjectionDevice& device, double tolerance = 1e-6);

struct RestrictedVerdict {
    bool holds = false;
    int first_index = -1;  // smallest k0 from which every sample is inside (-1 if none)
    double tail_ratio = 0; // worst Stolz ratio over k >= 40
};

/// The left inverse of sigma stays inside the Stolz region H(x_id, M) for all
/// schedule indices k >= k0 with k0 <= 40.
RestrictedVerdict is_g_restricted(const XCurve& curve, const ProjectionDevice& device, double M);

/// Like is_g_restricted, with membership tested in the Koranyi region of the
/// retraction instead of the Stolz region of the left inverse.
RestrictedVerdict koranyi_eventually(const XCurve& curve, const ProjectionDevice& device, double M);

/// Amplitude used when "restricted" is asked without an explicit M.
inline constexpr double kAdmissibleAmplitude = 100.0;

/// g-special and g-restricted.
bool is_admissible(const XCurve& curve, const ProjectionDevice& device, double M = kAdmissibleAmplitude);

enum class RatioOrder { first_over_second, second_over_first };

/// Limit of (1 - conj(x2) sigma2) / (1 - conj(x1) sigma1), or its inverse.
/// Requires a target on the Silov boundary.
ComplexLimit special_ratio(const XCurve& curve, RatioOrder order, const LimitOptions& options = {});

/// |sigma_partner - g(sigma_id)| / (1 - |g(sigma_id)|); tends to 0 exactly for
/// g-special curves.
LimitEstimate perturbation_ratio(const XCurve& curve, const ComplexGeodesic& geodesic);

} // namespace bidisc
