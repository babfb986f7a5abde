#pragma once

// Quantities defined by boundary limits: dilation coefficients, Busemann
// functions and their sublevel sets, horosphere estimators and Koranyi
// regions.

#include "bidisc/bidisc.hpp"
#include "bidisc/radial.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace bidisc {

struct DilationEstimate {
    double value = 0.0;       // in (0, +inf]
    bool flat_target = false; // the image stays away from the circle
    LimitEstimate estimate;   // of the dilation quotient itself
};

/// Limit of (1 - |w(s)|) / s for an image path w(s) whose source approaches
/// the circle at distance s.
DilationEstimate dilation_along(const std::function<DiscPoint(double)>& image, const LimitOptions& options = {});

DilationEstimate dilation_disc_estimate(const DiscMap& g, const BoundaryPoint& sigma, const LimitOptions& options = {});

/// lim (1 - |g(t sigma)|) / (1 - t). Throws not_converged when the quotient
/// neither settles nor diverges.
double dilation_disc(const DiscMap& g, const BoundaryPoint& sigma);

/// lambda_{phi_g}(f_j): exp of twice the limit of K(0, psi(t x)) - omega(0, f_j(psi(t x)))
/// where psi = phi_g, or phi_g composed with an automorphism fixing the base.
LimitEstimate phi_dilation_log(const BidiscComponent& f, const ComplexGeodesic& geodesic,
                               const std::optional<Automorphism>& reparam = std::nullopt);
double phi_dilation(const BidiscComponent& f, const ComplexGeodesic& geodesic,
                    const std::optional<Automorphism>& reparam = std::nullopt);

/// Abate's alpha(f_j) along the straight ray t -> t x.
double abate_alpha(const BidiscComponent& f, const BidiscBoundaryPoint& x);

/// Limit form lim_r [K(p, phi(r x_id)) - K(phi(0), phi(r x_id))].
LimitEstimate busemann_limit(const ComplexGeodesic& geodesic, const BidiscPoint& p);
/// Value of the limit form; throws not_converged.
double busemann_value(const ComplexGeodesic& geodesic, const BidiscPoint& p);
/// Closed form (1/2) log max(v_id(p), v_partner(p) / lambda_g).
double busemann_closed_form(const ComplexGeodesic& geodesic, const BidiscPoint& p);

/// E(x1, lambda1 R) x E(x2, lambda2 R); a factor is the whole disc when the
/// centre coordinate is interior or its lambda is infinite.
class BusemannSublevel {
public:
    BusemannSublevel(BidiscBoundaryPoint center, double R, double lambda1, double lambda2);
    /// The sublevel {B <= (1/2) log R} of the geodesic's Busemann function.
    static BusemannSublevel of_geodesic(const ComplexGeodesic& geodesic, double R);

    const BidiscBoundaryPoint& center() const noexcept { return center_; }
    /// Canonical data: lambda1 == 1 unless lambda1 is infinite, in which case
    /// lambda2 == 1.
    double radius() const noexcept { return radius_; }
    double lambda(int index) const noexcept { return lambda_[index]; }
    bool is_whole_disc(int index) const noexcept;
    /// Horocycle radius lambda_j R of a proper factor.
    double factor_radius(int index) const noexcept { return lambda_[index] * radius_; }

    /// max over proper factors of v_j(p_j) / (lambda_j R); membership iff <= 1.
    double level(const BidiscPoint& p) const;
    bool contains(const BidiscPoint& p) const { return level(p) <= 1.0; }

private:
    BidiscBoundaryPoint center_;
    double radius_;
    std::array<double, 2> lambda_;
};

enum class HorosphereMode { small, big };

struct HorosphereVerdict {
    bool inside = false;
    bool low_confidence = false;
    double estimate = 0.0; // lim sup (small) or lim inf (big) over the curve family
    std::vector<double> directional;
};

/// Estimates membership of p in the small or big horosphere E(y,R) / F(y,R)
/// by radial limits of K(p, w) - K(0, w) along `directions` approach curves.
HorosphereVerdict horosphere_estimate(const BidiscBoundaryPoint& y, double R, const BidiscPoint& p,
                                      HorosphereMode mode, int directions = 8);

enum class BusemannForm { closed, limit };

/// B(p) + K(phi(0), p). The limit form cannot resolve points that sit closer
/// to the circle than the sampling schedule reaches, so the closed form is
/// the default.
double koranyi_value(const ComplexGeodesic& geodesic, const BidiscPoint& p, BusemannForm form = BusemannForm::closed);
bool koranyi_contains(const ComplexGeodesic& geodesic, double M, const BidiscPoint& p,
                      BusemannForm form = BusemannForm::closed);

} // namespace bidisc
