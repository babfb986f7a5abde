#pragma once

// Runtime certificates for Julia's lemma, the Julia-Wolff-Caratheodory
// limits and the Lindelof principle on the bidisc.

#include "bidisc/curves.hpp"
#include "bidisc/random.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bidisc {

struct JuliaTarget {
    std::array<Complex, 2> y{};
    std::array<double, 2> lambda{};
    /// False for coordinates with infinite lambda; y_j is then only the
    /// observed radial limit and is not asserted.
    std::array<bool, 2> determined{};

    BidiscBoundaryPoint point() const;
};

/// y_j = radial limit of f_j along the geodesic, lambda_j = phi_dilation(f_j).
/// Throws hypothesis_violated when both lambdas are infinite.
JuliaTarget julia_target(const BidiscMap& f, const ComplexGeodesic& geodesic);

/// Draws a point of the closed sublevel set: proper factors through the
/// Euclidean parameterisation of the horodisc, whole-disc factors uniformly.
/// Roughly 40% of the horodisc samples are uniform by area, 30% hug the
/// horocycle and 30% crowd the tangency point. Points closer than 1e-10 to
/// the unit circle are redrawn.
BidiscPoint sample_sublevel(const BusemannSublevel& set, Rng& rng);

struct RadiusReport {
    double R = 0.0;
    std::size_t samples = 0;
    std::size_t violations = 0;
    double worst_slack = -INFINITY; // max of v_j(f(p)) - lambda_j R
};

struct JuliaCertificate {
    BidiscBoundaryPoint x;
    BidiscBoundaryPoint y;
    std::array<double, 2> lambda{};
    double lambda_g = 0.0;
    std::vector<RadiusReport> radii;
    std::size_t violations = 0;
    double worst_slack = -INFINITY;

    bool pass() const noexcept { return violations == 0; }
};

inline constexpr double kContainmentSlack = 1e-9;

/// Checks f(B_(1,lambda_g)(x,R)) in B_(lambda1,lambda2)(y,R) on sampled points.
JuliaCertificate verify_julia(const BidiscMap& f, const ComplexGeodesic& geodesic, const std::vector<double>& radii,
                              std::size_t samples_per_radius, std::uint64_t seed,
                              double tolerance = kContainmentSlack);

/// Containment of f(source) in target on sampled points of source.
RadiusReport check_containment(const BidiscMap& f, const BusemannSublevel& source, const BusemannSublevel& target,
                               std::size_t samples, Rng& rng, double tolerance = kContainmentSlack);

/// A complex-valued function on the bidisc used as a test function.
struct BidiscFunction {
    std::string name;
    std::function<Complex(const BidiscPoint&)> eval;
};

/// (1 - conj(y_j) f_j) / (1 - conj(x_id) u) with u the device's left inverse.
BidiscFunction jwc_first_ratio(const BidiscMap& f, int j, const JuliaTarget& target, const ProjectionDevice& device);
/// (1 - conj(y_j) f_j) / (1 - conj(x_partner) z_partner).
BidiscFunction jwc_second_ratio(const BidiscMap& f, int j, const JuliaTarget& target, const ProjectionDevice& device);

struct JwcCurveReport {
    std::string label;
    std::array<ComplexLimit, 2> first;  // per component j
    std::array<ComplexLimit, 2> second;
    std::array<Complex, 2> f_limit{};   // radial limit of f_j along the curve
    std::array<double, 2> first_deviation{};
    std::array<double, 2> second_deviation{};
    std::array<double, 2> quotient_deviation{}; // |first/second - lambda_g| / lambda_g
    double target_distance = 0.0;               // max_j |f_j limit - y_j|
};

struct JwcReport {
    JuliaTarget target;
    double lambda_g = 0.0;
    std::array<double, 2> expected_first{};  // lambda_j min(1, lambda_g)
    std::array<double, 2> expected_second{}; // lambda_j / max(1, lambda_g)
    std::vector<JwcCurveReport> curves;

    /// Worst relative deviation over curves, components and both ratios.
    double worst_deviation() const;
    double worst_quotient_deviation() const;
    double worst_target_distance() const;
};

/// Requires every curve to be admissible (throws curve_not_admissible) and
/// both lambdas finite (throws hypothesis_violated).
JwcReport jwc_ratios(const BidiscMap& f, const ProjectionDevice& device, const std::vector<XCurve>& curves);

struct KgBoundRow {
    double M = 0.0;
    std::size_t accepted = 0;  // proposals inside the Koranyi region
    double observed_sup = 0.0; // of |h|
    double bound = 0.0;
    bool pass = true;
};

/// Samples Koranyi regions H(x, M) by filtering a fixed proposal stream and
/// records sup |h|. `bound_lambda` is the lambda used in 2 lambda M^2 c_g
/// (pass NaN to skip the comparison).
std::vector<KgBoundRow> kg_bound_check(const BidiscFunction& h, const ComplexGeodesic& geodesic,
                                       const std::vector<double>& M_list, double bound_lambda, std::size_t proposals,
                                       std::uint64_t seed);

/// (1 + |g(0)|) / (1 - |g(0)|).
double c_g(const ComplexGeodesic& geodesic);

struct LindelofCurve {
    std::string label;
    bool admissible = false;
    ComplexLimit limit;
    double deviation = 0.0; // |limit - reference|
};

struct LindelofReport {
    std::string function;
    Complex reference{};
    std::string reference_curve;
    std::vector<LindelofCurve> curves;
    std::size_t admissible = 0;
    double worst_admissible_deviation = 0.0;
    double worst_inadmissible_deviation = 0.0;
    bool pass = false; // >= 5 admissible curves, all converged within tolerance
};

/// Restricted K_g-limit check of h along a curve family.
LindelofReport lindelof_check(const BidiscFunction& h, const ProjectionDevice& device,
                              const std::vector<XCurve>& family, double tolerance = 1e-4);

} // namespace bidisc
