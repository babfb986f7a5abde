#pragma once

// Geometry of the unit disc: points that carry their distance to the
// boundary, boundary points, horocycles, Stolz regions and the Poincare
// distance.

#include <complex>

namespace bidisc {

using Complex = std::complex<double>;

/// Smallest admissible distance 1-|z| for points built from a raw complex value.
inline constexpr double kInteriorMargin = 1e-15;

/// A point of the open unit disc.
///
/// Alongside the value the point stores gap = 1-|z|^2. Near the boundary this
/// quantity cannot be recovered from the rounded value, so every producer that
/// knows it exactly (radial samples, Mobius maps, products, convex mixes)
/// passes it through instead of recomputing it.
class DiscPoint {
public:
    DiscPoint() = default;

    /// Rejects |z| >= 1 - kInteriorMargin. The gap is computed as (1-|z|)(1+|z|).
    explicit DiscPoint(Complex z);
    DiscPoint(double re, double im) : DiscPoint(Complex{re, im}) {}

    /// Trusted construction from a value and an independently computed gap.
    /// Requires gap > 0 (up to underflow, which is clamped to the smallest
    /// normal double) and |z| <= 1.
    static DiscPoint with_gap(Complex z, double gap);

    /// The point (1 - defect) * direction with its exact gap defect*(2-defect).
    static DiscPoint radial(Complex direction, double defect);

    Complex value() const noexcept { return z_; }
    double gap() const noexcept { return gap_; }
    double modulus() const noexcept { return std::abs(z_); }
    /// 1 - |z|, computed from the stored gap.
    double boundary_distance() const noexcept { return gap_ / (1.0 + std::abs(z_)); }

private:
    DiscPoint(Complex z, double gap, int) : z_(z), gap_(gap) {}

    Complex z_{0.0, 0.0};
    double gap_ = 1.0;
};

/// A point of the unit circle, renormalised on construction.
class BoundaryPoint {
public:
    BoundaryPoint() = default;
    /// Accepts | |z| - 1 | <= 1e-12 and stores z / |z|.
    explicit BoundaryPoint(Complex z);
    static BoundaryPoint from_angle(double radians);

    Complex value() const noexcept { return z_; }
    double angle() const noexcept { return std::arg(z_); }

    friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

private:
    Complex z_{1.0, 0.0};
};

/// |sigma - z|^2 / (1 - |z|^2): the horocycle value function centred at sigma.
double horocycle_value(const BoundaryPoint& center, const DiscPoint& z);

/// Closed horodisc E(center, radius) = { z : horocycle_value(center, z) <= radius }.
struct Horocycle {
    BoundaryPoint center;
    double radius = 1.0;

    Horocycle(BoundaryPoint c, double r);

    bool contains(const DiscPoint& z) const { return horocycle_value(center, z) <= radius; }
    /// The horodisc is the Euclidean disc of this centre and radius.
    Complex euclidean_center() const { return center.value() / (1.0 + radius); }
    double euclidean_radius() const { return radius / (1.0 + radius); }
};

/// |z - w| / |1 - conj(z) w|.
double pseudo_distance(const DiscPoint& z, const DiscPoint& w);

/// Poincare distance (1/2) log((1+rho)/(1-rho)).
double poincare_distance(const DiscPoint& z, const DiscPoint& w);

/// |y - z| / (1 - |z|).
double stolz_ratio(const BoundaryPoint& vertex, const DiscPoint& z);

/// Membership in the Stolz region H(vertex, amplitude) (strict inequality).
bool stolz_contains(const BoundaryPoint& vertex, double amplitude, const DiscPoint& z);

/// z -> e^{i phase} (z - a) / (1 - conj(a) z) acting on points with gaps.
class Automorphism {
public:
    Automorphism() = default;
    Automorphism(Complex a, double phase);

    /// The automorphism with zero `a` whose phase is chosen so that it fixes
    /// the boundary point `fixed`.
    static Automorphism fixing(const BoundaryPoint& fixed, Complex a);

    Complex center() const noexcept { return a_; }
    double phase() const noexcept { return phase_; }

    DiscPoint operator()(const DiscPoint& z) const;
    Complex derivative(Complex z) const;
    Automorphism inverse() const;

    /// Image of a boundary point.
    BoundaryPoint operator()(const BoundaryPoint& z) const;

private:
    Complex a_{0.0, 0.0};
    double phase_ = 0.0;
    Complex rotation_{1.0, 0.0};
};

/// A point of the open bidisc, each coordinate carrying its own gap.
struct BidiscPoint {
    DiscPoint z1;
    DiscPoint z2;

    BidiscPoint() = default;
    BidiscPoint(DiscPoint a, DiscPoint b) : z1(a), z2(b) {}
    BidiscPoint(Complex a, Complex b) : z1(a), z2(b) {}

    /// Coordinate access by zero-based index.
    const DiscPoint& operator[](int index) const { return index == 0 ? z1 : z2; }
};

} // namespace bidisc
