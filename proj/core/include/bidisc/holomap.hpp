#pragma once

// Closed expression algebra for holomorphic self-maps of the disc and the
// bidisc. Every constructor is known to map into the closed disc, so a tree
// built from them is a self-map by construction; evaluation propagates exact
// first derivatives and the gap 1-|w|^2 of every intermediate value.

#include "bidisc/disc.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bidisc {

enum class ExprKind {
    constant,
    identity,   // the disc variable z
    coordinate, // z1 or z2
    mobius,
    power,
    blaschke,
    compose,
    convex_mix,
    product,
};

struct BlaschkeFactor {
    Complex zero;
    int multiplicity = 1;

    friend bool operator==(const BlaschkeFactor&, const BlaschkeFactor&) = default;
};

/// Value, gap and partial derivatives with respect to up to two variables.
struct Jet {
    Complex value;
    double gap = 1.0;
    std::array<Complex, 2> d{};

    DiscPoint point() const { return DiscPoint::with_gap(value, gap); }
};

namespace detail {
struct ExprNode;
}
using ExprPtr = std::shared_ptr<const detail::ExprNode>;

namespace detail {
struct ExprNode {
    ExprKind kind = ExprKind::identity;
    Complex c{};                 // constant value or Mobius centre
    double phase = 0.0;          // Mobius / Blaschke rotation
    double t = 0.0;              // convex_mix weight
    int n = 0;                   // power exponent or coordinate index (1-based)
    std::vector<BlaschkeFactor> factors;
    ExprPtr lhs;                 // outer map for compose, first operand otherwise
    ExprPtr rhs;
};

Jet evaluate(const ExprNode& node, const Jet* inputs);
bool structurally_equal(const ExprNode& a, const ExprNode& b);
} // namespace detail

/// A holomorphic self-map of the unit disc.
class DiscMap {
public:
    static DiscMap constant(Complex c);
    static DiscMap identity();
    static DiscMap mobius(Complex a, double phase);
    static DiscMap power(int n);
    static DiscMap blaschke(std::vector<BlaschkeFactor> factors, double phase);
    static DiscMap compose(const DiscMap& outer, const DiscMap& inner);
    static DiscMap convex_mix(double t, const DiscMap& f, const DiscMap& g);
    static DiscMap product(const DiscMap& f, const DiscMap& g);

    /// Raw evaluation; z must satisfy |z| <= 1 - 1e-15.
    Complex operator()(Complex z) const;
    Complex derivative(Complex z) const;

    /// Gap-preserving evaluation for points arbitrarily close to the boundary.
    DiscPoint operator()(const DiscPoint& z) const;
    Jet jet(const DiscPoint& z) const;

    /// The map as an automorphism when it is one syntactically (identity,
    /// Mobius, or compositions of these).
    std::optional<Automorphism> as_automorphism() const;
    /// Exact inverse for automorphism trees.
    std::optional<DiscMap> inverse() const;

    std::string to_string() const;
    const detail::ExprNode& node() const { return *node_; }
    ExprPtr ptr() const { return node_; }

    friend bool operator==(const DiscMap& a, const DiscMap& b) {
        return detail::structurally_equal(*a.node_, *b.node_);
    }

private:
    explicit DiscMap(ExprPtr node) : node_(std::move(node)) {}
    friend class BidiscComponent;
    friend DiscMap disc_map_from_node(ExprPtr);

    ExprPtr node_;
};

/// One component of a self-map of the bidisc: a tree over z1, z2 built with
/// constants, post-composition by disc maps, convex mixes and products.
class BidiscComponent {
public:
    static BidiscComponent coordinate(int index); // 1 or 2
    static BidiscComponent constant(Complex c);
    static BidiscComponent compose(const DiscMap& outer, const BidiscComponent& inner);
    static BidiscComponent convex_mix(double t, const BidiscComponent& f, const BidiscComponent& g);
    static BidiscComponent product(const BidiscComponent& f, const BidiscComponent& g);

    Complex operator()(Complex z1, Complex z2) const;
    DiscPoint operator()(const BidiscPoint& p) const;
    Jet jet(const BidiscPoint& p) const;

    /// True when the tree is exactly the coordinate projection z_index.
    bool is_coordinate(int index) const;

    std::string to_string() const;
    const detail::ExprNode& node() const { return *node_; }

    friend bool operator==(const BidiscComponent& a, const BidiscComponent& b) {
        return detail::structurally_equal(*a.node_, *b.node_);
    }

private:
    explicit BidiscComponent(ExprPtr node) : node_(std::move(node)) {}
    friend BidiscComponent component_from_node(ExprPtr);

    ExprPtr node_;
};

// Wrap an already validated node (used by the text parser).
DiscMap disc_map_from_node(ExprPtr node);
BidiscComponent component_from_node(ExprPtr node);

/// f = (f1, f2) : bidisc -> bidisc.
struct BidiscMap {
    BidiscComponent f1;
    BidiscComponent f2;

    static BidiscMap identity();

    BidiscPoint operator()(const BidiscPoint& p) const;
    const BidiscComponent& component(int index) const { return index == 0 ? f1 : f2; }
    /// Row j holds the partials of f_{j+1} with respect to z1 and z2.
    std::array<std::array<Complex, 2>, 2> jacobian(const BidiscPoint& p) const;

    friend bool operator==(const BidiscMap&, const BidiscMap&) = default;
};

struct SelfMapReport {
    bool pass = true;
    std::size_t samples = 0;
    double max_modulus = 0.0;
    std::vector<std::array<Complex, 2>> violations;
};

/// Samples the bidisc with a scrambled Halton sequence plus shells at
/// |z_j| = 1 - 10^-k (k = 1..9) and checks that both components stay in the
/// open disc.
SelfMapReport validate_self_map(const BidiscMap& f, std::size_t n_samples, std::uint64_t seed);

} // namespace bidisc
