#pragma once

// Iteration of fixed-point-free self-maps of the bidisc, Herve's slice
// classification and the Wolff / generalized Wolff point sets.

#include "bidisc/julia.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bidisc {

/// orbit[k] = f^k(z0), k = 0..n. Domain escapes are rethrown with the index.
std::vector<BidiscPoint> iterate(const BidiscMap& f, const BidiscPoint& z0, std::size_t n);

struct TargetCluster {
    std::array<Complex, 2> center{};
    std::size_t members = 0;
};

/// Clusters the last 10% of each orbit. Throws interior_fixed_point when an
/// orbit settles at an interior point.
std::vector<TargetCluster> target_set(const BidiscMap& f, const std::vector<BidiscPoint>& seeds, std::size_t n,
                                      double cluster_tol = 1e-3);

/// 20 deterministic interior seeds.
std::vector<BidiscPoint> default_seeds(std::uint64_t seed, std::size_t count = 20);

enum class HerveType { first, second, third };

std::string_view to_string(HerveType t) noexcept;

/// Outcome of solving the slice problems of one component on a grid.
struct SliceWitness {
    int component = 0;              // 0 for f1(., y), 1 for f2(x, .)
    bool has_fixed_function = false; // F_j exists
    Complex wolff_point{};          // slice Wolff point otherwise
    std::vector<Complex> grid;
    std::vector<Complex> values;    // F_j on the grid
    double residual = 0.0;          // max |f_j(F_j(y), y) - F_j(y)|
    double wolff_spread = 0.0;      // max pairwise distance of slice Wolff points
};

struct HerveClassification {
    HerveType type = HerveType::third;
    std::array<SliceWitness, 2> slices;
    /// Index j with f_j equal to the coordinate projection, detected on the tree.
    std::optional<int> degenerate;

    // first type
    Complex theta1{}, theta2{};
    double lambda1 = 0.0, lambda2 = 0.0;

    // second type; wolff_index is the coordinate whose slices have a Wolff point
    int wolff_index = 0;
    Complex alpha1{};
    std::optional<Complex> alpha2;
    double k2 = 0.0;
    bool k2_borderline = false;

    // third type
    Complex gamma1{}, gamma2{};
};

struct ClassifyOptions {
    std::size_t grid = 24;
    double tolerance = 1e-6;       // independence of slice Wolff points
    std::size_t max_iterations = 200000;
};

HerveClassification classify_herve(const BidiscMap& f, const ClassifyOptions& options = {});

/// Interior fixed point of x -> f_j(x, y) (j = 0) or y -> f_j(x, y) (j = 1)
/// by the damped iteration x <- (x + f_j) / 2; nullopt when the iteration
/// runs to the circle.
std::optional<DiscPoint> solve_slice(const BidiscMap& f, int j, const DiscPoint& other,
                                     std::size_t max_iterations = 200000);

enum class PieceKind { point, vertical, horizontal };

/// A point (a, b), the flat piece {a} x D (vertical) or D x {b} (horizontal).
struct WolffPiece {
    PieceKind kind = PieceKind::point;
    Complex a{}, b{};

    friend bool operator==(const WolffPiece&, const WolffPiece&) = default;
};

struct WolffSet {
    std::vector<WolffPiece> pieces;

    bool empty() const noexcept { return pieces.empty(); }
    /// Euclidean distance from a point of the closed bidisc.
    double distance(const std::array<Complex, 2>& q) const;
    bool contains(const WolffSet& other) const;
    /// Pieces linked through shared closure points.
    bool connected() const;
    std::string to_string() const;
};

struct WolffSets {
    std::string w_case;  // "i" .. "vi"
    std::string wg_case; // "i" .. "iii", or "n/a" for the degenerate case
    WolffSet w;
    WolffSet wg;
    std::string note;
};

WolffSets wolff_sets(const HerveClassification& c);

struct GeneralizedWolffVerdict {
    bool pass = true;
    std::vector<RadiusReport> radii;
};

/// Direct test of f(B(tau, R)) in B(tau, R) for the geodesic's sublevels.
GeneralizedWolffVerdict check_generalized_wolff(const BidiscMap& f, const BidiscBoundaryPoint& tau,
                                                const ComplexGeodesic& geodesic, const std::vector<double>& radii,
                                                std::size_t samples, std::uint64_t seed);

/// Geodesics through tau tried by generalized_wolff_test: for a Silov point
/// rotations composed with automorphisms of dilation 1, 3 and 1/3; for a
/// flat point the constant partner.
std::vector<ComplexGeodesic> candidate_geodesics(const BidiscBoundaryPoint& tau);

/// Passes when some candidate geodesic passes check_generalized_wolff.
bool generalized_wolff_test(const BidiscMap& f, const BidiscBoundaryPoint& tau, const std::vector<double>& radii,
                            std::size_t samples, std::uint64_t seed);

/// Boundary points drawn from the pieces of a set.
std::vector<BidiscBoundaryPoint> sample_set(const WolffSet& set, Rng& rng, std::size_t per_piece);

} // namespace bidisc
