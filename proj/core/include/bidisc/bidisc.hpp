#pragma once

// Geometry of the bidisc: the Kobayashi distance, boundary points with their
// Silov data, complex geodesics of graph type and projection devices.

#include "bidisc/holomap.hpp"

#include <array>
#include <optional>
#include <string>

namespace bidisc {

/// max of the componentwise Poincare distances.
double kobayashi_distance(const BidiscPoint& p, const BidiscPoint& q);

/// Poincare distance from the origin, accurate for points near the circle.
double distance_from_origin(const DiscPoint& z);

/// Coordinates with modulus >= 1 - kSilovThreshold count as unimodular.
inline constexpr double kSilovThreshold = 1e-9;

class BidiscBoundaryPoint {
public:
    /// Requires max(|x1|, |x2|) = 1 up to kSilovThreshold. Unimodular
    /// coordinates are snapped onto the circle.
    BidiscBoundaryPoint(Complex x1, Complex x2);

    Complex x1() const noexcept { return x_[0]; }
    Complex x2() const noexcept { return x_[1]; }
    Complex operator[](int index) const noexcept { return x_[index]; }

    bool unimodular(int index) const noexcept { return unimodular_[index]; }
    /// Number of unimodular coordinates (1 or 2).
    int silov_degree() const noexcept { return int(unimodular_[0]) + int(unimodular_[1]); }
    bool on_silov_boundary() const noexcept { return silov_degree() == 2; }
    /// The point with its non-unimodular coordinates replaced by 0.
    std::array<Complex, 2> silov_part() const noexcept;
    BoundaryPoint boundary(int index) const;

    friend bool operator==(const BidiscBoundaryPoint& a, const BidiscBoundaryPoint& b) {
        return a.x_ == b.x_;
    }

private:
    std::array<Complex, 2> x_{};
    std::array<bool, 2> unimodular_{};
};

/// The point (1 - s) x approaching x radially, with exact gaps on the
/// unimodular coordinates.
BidiscPoint radial_point(const BidiscBoundaryPoint& x, double s);

/// The disc point (1 - s) x for a unimodular or interior x.
DiscPoint scaled_point(Complex x, double s);

enum class Orientation {
    first_identity,  // z -> (z, g(z))
    second_identity, // z -> (g(z), z)
};

std::string_view to_string(Orientation o) noexcept;
Orientation parse_orientation(std::string_view text);

/// A complex geodesic of graph type through a boundary point.
class ComplexGeodesic {
public:
    /// Geodesic through the boundary point whose identity coordinate is
    /// `base`; the partner coordinate is the radial limit of g at `base`.
    static ComplexGeodesic through(DiscMap g, Orientation orientation, BoundaryPoint base);
    /// Geodesic through a prescribed x; the partner coordinate of x must match
    /// g at t = 1 - 2^-40 to 1e-6.
    static ComplexGeodesic make(DiscMap g, Orientation orientation, BidiscBoundaryPoint x);

    BidiscPoint point(const DiscPoint& z) const;
    BidiscPoint point(Complex z) const { return point(DiscPoint(z)); }
    /// The geodesic ray phi((1 - s) base).
    BidiscPoint ray(double s) const { return point(DiscPoint::radial(base().value(), s)); }

    const DiscMap& g() const noexcept { return g_; }
    Orientation orientation() const noexcept { return orientation_; }
    const BidiscBoundaryPoint& x() const noexcept { return x_; }
    /// Index (0 or 1) of the coordinate on which the geodesic is the identity.
    int identity_index() const noexcept { return orientation_ == Orientation::first_identity ? 0 : 1; }
    int partner_index() const noexcept { return 1 - identity_index(); }
    BoundaryPoint base() const { return x_.boundary(identity_index()); }

    /// Boundary dilation coefficient of g at the base point; +inf when the
    /// partner coordinate of x is interior.
    double lambda_g() const noexcept { return lambda_g_; }

private:
    ComplexGeodesic(DiscMap g, Orientation o, BidiscBoundaryPoint x);

    DiscMap g_;
    Orientation orientation_;
    BidiscBoundaryPoint x_;
    double lambda_g_;
};

enum class DeviceKind { coordinate, linear, abate };

std::string_view to_string(DeviceKind k) noexcept;

/// A left inverse of a geodesic and the retraction it induces.
class ProjectionDevice {
public:
    static ProjectionDevice coordinate(ComplexGeodesic geodesic);
    /// u = a z_id + (1 - a) conj(zeta) z_partner; needs g(u) = zeta u with
    /// |zeta| = 1 (the diagonal up to rotation).
    static ProjectionDevice linear(ComplexGeodesic geodesic, Complex a);
    /// Abate's left inverse (1/d_x)<z, silov part of x>, rotated so that it
    /// inverts the geodesic with the given base point.
    static ProjectionDevice abate(ComplexGeodesic geodesic);

    DiscPoint left_inverse(const BidiscPoint& p) const;
    BidiscPoint retraction(const BidiscPoint& p) const { return geodesic_.point(left_inverse(p)); }

    const ComplexGeodesic& geodesic() const noexcept { return geodesic_; }
    DeviceKind kind() const noexcept { return kind_; }
    Complex linear_weight() const noexcept { return a_; }

private:
    ProjectionDevice(ComplexGeodesic g, DeviceKind k, Complex a, Complex zeta)
        : geodesic_(std::move(g)), kind_(k), a_(a), zeta_(zeta) {}

    ComplexGeodesic geodesic_;
    DeviceKind kind_;
    Complex a_;
    Complex zeta_; // rotation carried by the partner coordinate
};

} // namespace bidisc
