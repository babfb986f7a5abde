#include "bidisc/dynamics.hpp"

#include "bidisc/error.hpp"
#include "bidisc/expr_text.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bidisc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double euclid(const std::array<Complex, 2>& p, const std::array<Complex, 2>& q) {
    return std::sqrt(std::norm(p[0] - q[0]) + std::norm(p[1] - q[1]));
}

std::array<Complex, 2> values(const BidiscPoint& p) { return {p.z1.value(), p.z2.value()}; }

BidiscPoint slice_point(int j, const DiscPoint& x, const DiscPoint& other) {
    return j == 0 ? BidiscPoint(x, other) : BidiscPoint(other, x);
}

// (x + y) / 2 with the exact gap of a convex mix.
DiscPoint midpoint(const DiscPoint& x, const DiscPoint& y) {
    const double gap = 0.5 * x.gap() + 0.5 * y.gap() + 0.25 * std::norm(x.value() - y.value());
    return DiscPoint::with_gap(0.5 * (x.value() + y.value()), gap);
}

struct DampedResult {
    enum { interior, boundary, undecided } outcome = undecided;
    DiscPoint point;
};

// boundary_cut = 0 disables the escape test, used when the fixed point is
// known to exist and may sit arbitrarily close to the circle.
DampedResult damped(const BidiscMap& f, int j, const DiscPoint& other, std::size_t max_iterations,
                    double boundary_cut) {
    const BidiscComponent& fj = f.component(j);
    DiscPoint x(Complex{});
    for (std::size_t it = 0; it < max_iterations; ++it) {
        const DiscPoint next = midpoint(x, fj(slice_point(j, x, other)));
        const double step = std::abs(next.value() - x.value());
        x = next;
        if (step == 0.0 || step <= 1e-12 * x.boundary_distance()) {
            return {DampedResult::interior, x};
        }
        if (x.boundary_distance() < boundary_cut) {
            return {DampedResult::boundary, x};
        }
    }
    return {DampedResult::undecided, x};
}

DiscPoint fixed_function(const BidiscMap& f, int j, const DiscPoint& other, std::size_t max_iterations) {
    const DampedResult r = damped(f, j, other, max_iterations, 0.0);
    if (r.outcome != DampedResult::interior) {
        fail(ErrorCode::not_converged, "slice fixed point did not settle");
    }
    return r.point;
}

std::vector<Complex> slice_grid(std::size_t count) {
    constexpr double golden_angle = 2.399963229728653;
    std::vector<Complex> grid;
    for (std::size_t i = 0; i < count; ++i) {
        const double r = 0.9 * std::sqrt((static_cast<double>(i) + 0.5) / static_cast<double>(count));
        grid.push_back(std::polar(r, golden_angle * static_cast<double>(i)));
    }
    return grid;
}

SliceWitness solve_slices(const BidiscMap& f, int j, const ClassifyOptions& o) {
    SliceWitness w;
    w.component = j;
    w.grid = slice_grid(o.grid);
    std::size_t interior = 0;
    std::vector<Complex> wolff;
    for (const Complex y : w.grid) {
        const DiscPoint other(y);
        const DampedResult r = damped(f, j, other, o.max_iterations, 1e-10);
        switch (r.outcome) {
        case DampedResult::interior: {
            ++interior;
            w.values.push_back(r.point.value());
            const DiscPoint image = f.component(j)(slice_point(j, r.point, other));
            w.residual = std::max(w.residual, std::abs(image.value() - r.point.value()));
            break;
        }
        case DampedResult::boundary: wolff.push_back(r.point.value() / std::abs(r.point.value())); break;
        case DampedResult::undecided:
            fail(ErrorCode::ambiguous_slice, "slice solver for f" + std::to_string(j + 1) + " neither settled nor escaped");
        }
    }
    if (interior == w.grid.size()) {
        w.has_fixed_function = true;
        return w;
    }
    if (!wolff.empty() && interior > 0) {
        fail(ErrorCode::ambiguous_slice,
             "slices of f" + std::to_string(j + 1) + " mix interior fixed points and boundary escapes");
    }
    for (std::size_t a = 0; a < wolff.size(); ++a) {
        for (std::size_t b = a + 1; b < wolff.size(); ++b) {
            w.wolff_spread = std::max(w.wolff_spread, std::abs(wolff[a] - wolff[b]));
        }
    }
    if (w.wolff_spread > o.tolerance) {
        fail(ErrorCode::ambiguous_slice, "slice Wolff points of f" + std::to_string(j + 1) + " depend on the other variable");
    }
    w.wolff_point = wolff.front();
    return w;
}

// Wolff point of a self-map of the disc given pointwise.
Complex disc_wolff_point(const std::function<DiscPoint(const DiscPoint&)>& map) {
    DiscPoint x(Complex{});
    for (int it = 0; it < 100000; ++it) {
        const DiscPoint next = map(x);
        const double step = std::abs(next.value() - x.value());
        x = next;
        if (x.boundary_distance() < 1e-12) {
            return x.value() / std::abs(x.value());
        }
        if (step == 0.0 || (step < 1e-15 && x.boundary_distance() > 1e-6)) {
            fail(ErrorCode::interior_fixed_point, "composition of the fixed-point functions has an interior fixed point");
        }
    }
    fail(ErrorCode::not_converged, "orbit of the composed fixed-point functions did not reach the circle");
}

Complex snap(Complex z) {
    const auto r = [](double v) {
        const double s = std::round(v * 1e9) / 1e9;
        return s == 0.0 ? 0.0 : s;
    };
    return {r(z.real()), r(z.imag())};
}

std::string pretty(Complex z) {
    const Complex s = snap(z);
    return s.imag() == 0.0 ? format_double(s.real()) : format_complex(s);
}

constexpr double kSame = 1e-9;

} // namespace

std::vector<BidiscPoint> iterate(const BidiscMap& f, const BidiscPoint& z0, std::size_t n) {
    if (n > 1000000) {
        fail(ErrorCode::invalid_argument, "at most 10^6 iterates");
    }
    std::vector<BidiscPoint> orbit;
    orbit.reserve(n + 1);
    orbit.push_back(z0);
    for (std::size_t k = 1; k <= n; ++k) {
        try {
            orbit.push_back(f(orbit.back()));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::domain) {
                throw;
            }
            fail(ErrorCode::domain, "iterate " + std::to_string(k) + " left the bidisc: " + e.what());
        }
    }
    return orbit;
}

std::vector<BidiscPoint> default_seeds(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<BidiscPoint> seeds;
    for (std::size_t i = 0; i < count; ++i) {
        const DiscPoint a = rng.disc_point(0.9);
        const DiscPoint b = rng.disc_point(0.9);
        seeds.emplace_back(a, b);
    }
    return seeds;
}

std::vector<TargetCluster> target_set(const BidiscMap& f, const std::vector<BidiscPoint>& seeds, std::size_t n,
                                      double cluster_tol) {
    std::vector<TargetCluster> clusters;
    const std::size_t tail = std::max<std::size_t>(1, n / 10);
    for (const BidiscPoint& seed : seeds) {
        const std::vector<BidiscPoint> orbit = iterate(f, seed, n);
        for (std::size_t k = 1; k < orbit.size(); ++k) {
            const BidiscPoint& p = orbit[k];
            if (euclid(values(p), values(orbit[k - 1])) < 1e-10 && p.z1.boundary_distance() > 1e-6 &&
                p.z2.boundary_distance() > 1e-6) {
                fail(ErrorCode::interior_fixed_point, "orbit settled at an interior point after " + std::to_string(k) + " steps");
            }
        }
        for (std::size_t k = orbit.size() - tail; k < orbit.size(); ++k) {
            const auto q = values(orbit[k]);
            auto hit = std::find_if(clusters.begin(), clusters.end(),
                                    [&](const TargetCluster& c) { return euclid(c.center, q) <= cluster_tol; });
            if (hit == clusters.end()) {
                clusters.push_back({q, 1});
            } else {
                ++hit->members;
            }
        }
    }
    return clusters;
}

std::string_view to_string(HerveType t) noexcept {
    switch (t) {
    case HerveType::first: return "first";
    case HerveType::second: return "second";
    case HerveType::third: return "third";
    }
    return "?";
}

std::optional<DiscPoint> solve_slice(const BidiscMap& f, int j, const DiscPoint& other, std::size_t max_iterations) {
    const DampedResult r = damped(f, j, other, max_iterations, 1e-10);
    if (r.outcome == DampedResult::undecided) {
        fail(ErrorCode::ambiguous_slice, "slice solver neither settled nor escaped");
    }
    if (r.outcome == DampedResult::boundary) {
        return std::nullopt;
    }
    return r.point;
}

HerveClassification classify_herve(const BidiscMap& f, const ClassifyOptions& o) {
    HerveClassification c;
    for (int j = 0; j < 2; ++j) {
        if (f.component(j).is_coordinate(j + 1)) {
            if (c.degenerate) {
                fail(ErrorCode::hypothesis_violated, "the identity map has interior fixed points");
            }
            c.degenerate = j;
        }
    }
    for (int j = 0; j < 2; ++j) {
        if (c.degenerate != j) {
            c.slices[j] = solve_slices(f, j, o);
        }
    }
    if (c.degenerate) {
        const int other = 1 - *c.degenerate;
        if (c.slices[other].has_fixed_function) {
            fail(ErrorCode::interior_fixed_point, "a coordinate projection together with a slice fixed point gives interior fixed points");
        }
        c.type = HerveType::third;
        c.gamma1 = c.gamma2 = c.slices[other].wolff_point;
        return c;
    }
    const bool F1 = c.slices[0].has_fixed_function;
    const bool F2 = c.slices[1].has_fixed_function;
    const std::size_t cap = o.max_iterations;
    if (F1 && F2) {
        c.type = HerveType::first;
        const auto F1_at = [&](const DiscPoint& y) { return fixed_function(f, 0, y, cap); };
        const auto F2_at = [&](const DiscPoint& x) { return fixed_function(f, 1, x, cap); };
        c.theta1 = disc_wolff_point([&](const DiscPoint& x) { return F1_at(F2_at(x)); });
        c.theta2 = disc_wolff_point([&](const DiscPoint& y) { return F2_at(F1_at(y)); });
        const auto dilation = [&](const auto& F, Complex at, const char* what) {
            const DilationEstimate d = dilation_along([&](double s) { return F(DiscPoint::radial(at, s)); });
            if (d.estimate.status == LimitStatus::not_converged) {
                fail(ErrorCode::not_converged, std::string(what) + " did not converge (" + d.estimate.diagnostic + ")");
            }
            return d.value;
        };
        c.lambda1 = dilation(F1_at, c.theta2, "dilation of F1");
        c.lambda2 = dilation(F2_at, c.theta1, "dilation of F2");
    } else if (F1 || F2) {
        c.type = HerveType::second;
        c.wolff_index = F1 ? 1 : 0;
        const int fixed = 1 - c.wolff_index;
        c.alpha1 = c.slices[c.wolff_index].wolff_point;
        const auto F = [&](Complex x) { return fixed_function(f, fixed, DiscPoint(x), cap).value(); };
        LimitOptions opts;
        opts.tolerance = 1e-10;
        const ComplexLimit boundary_value = radial_limit_complex([&](double s) { return F((1.0 - s) * c.alpha1); }, opts);
        if (boundary_value.converged() && std::abs(std::abs(boundary_value.value) - 1.0) <= 1e-6) {
            c.alpha2 = boundary_value.value / std::abs(boundary_value.value);
        }
        // One-sided differences toward the interior, Richardson-extrapolated.
        LimitOptions fd;
        fd.k_max = 26;
        fd.tolerance = 1e-6;
        const LimitEstimate k2 = radial_limit_defect([&](double s) {
            const Complex x = (1.0 - s) * c.alpha1;
            const double h = 0.5 * s;
            const Complex fx = F(x);
            const Complex d1 = (fx - F(x - h * c.alpha1)) / (h * c.alpha1);
            const Complex d2 = (fx - F(x - 0.5 * h * c.alpha1)) / (0.5 * h * c.alpha1);
            return std::abs(2.0 * d2 - d1);
        }, fd);
        if (k2.status == LimitStatus::not_converged) {
            fail(ErrorCode::not_converged, "k2 did not converge (" + k2.diagnostic + ")");
        }
        c.k2 = k2.infinite() ? kInf : k2.value;
        c.k2_borderline = std::abs(c.k2 - 1.0) <= 1e-4;
    } else {
        c.type = HerveType::third;
        c.gamma1 = c.slices[0].wolff_point;
        c.gamma2 = c.slices[1].wolff_point;
    }
    return c;
}

double WolffSet::distance(const std::array<Complex, 2>& q) const {
    double best = kInf;
    for (const WolffPiece& p : pieces) {
        switch (p.kind) {
        case PieceKind::point: best = std::min(best, euclid(q, {p.a, p.b})); break;
        case PieceKind::vertical: best = std::min(best, std::abs(q[0] - p.a)); break;
        case PieceKind::horizontal: best = std::min(best, std::abs(q[1] - p.b)); break;
        }
    }
    return best;
}

bool WolffSet::contains(const WolffSet& other) const {
    for (const WolffPiece& p : other.pieces) {
        bool found = false;
        for (const WolffPiece& q : pieces) {
            if (p.kind == PieceKind::point) {
                found = found || WolffSet{{q}}.distance({p.a, p.b}) <= kSame;
            } else if (p.kind == q.kind) {
                found = found || (p.kind == PieceKind::vertical ? std::abs(p.a - q.a) : std::abs(p.b - q.b)) <= kSame;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

bool WolffSet::connected() const {
    if (pieces.empty()) {
        return true;
    }
    const auto touch = [](const WolffPiece& p, const WolffPiece& q) {
        if (p.kind == PieceKind::point) {
            return WolffSet{{q}}.distance({p.a, p.b}) <= kSame;
        }
        if (q.kind == PieceKind::point) {
            return WolffSet{{p}}.distance({q.a, q.b}) <= kSame;
        }
        if (p.kind != q.kind) {
            return true; // {a} x D and D x {b} share the closure point (a, b)
        }
        return (p.kind == PieceKind::vertical ? std::abs(p.a - q.a) : std::abs(p.b - q.b)) <= kSame;
    };
    std::vector<bool> seen(pieces.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t k = 0; k < pieces.size(); ++k) {
            if (!seen[k] && touch(pieces[i], pieces[k])) {
                seen[k] = true;
                stack.push_back(k);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string WolffSet::to_string() const {
    if (pieces.empty()) {
        return "∅";
    }
    std::string out;
    for (const WolffPiece& p : pieces) {
        if (!out.empty()) {
            out += " ∪ ";
        }
        switch (p.kind) {
        case PieceKind::point: out += "{(" + pretty(p.a) + "," + pretty(p.b) + ")}"; break;
        case PieceKind::vertical: out += "{" + pretty(p.a) + "}×Δ"; break;
        case PieceKind::horizontal: out += "Δ×{" + pretty(p.b) + "}"; break;
        }
    }
    return out;
}

WolffSets wolff_sets(const HerveClassification& c) {
    WolffSets s;
    if (c.degenerate) {
        const Complex g = c.gamma2;
        s.w_case = "vi";
        s.wg_case = "n/a";
        s.w.pieces = {{PieceKind::vertical, g, {}}, {PieceKind::point, g, g}, {PieceKind::horizontal, {}, g}};
        s.wg = s.w;
        s.note = "the printed set repeats (1,1) and one flat piece; the distinct pieces are listed once";
        return s;
    }
    switch (c.type) {
    case HerveType::first: {
        const WolffPiece tau{PieceKind::point, c.theta1, c.theta2};
        s.wg_case = "i";
        s.wg.pieces = {tau};
        if (c.lambda1 > 1.0 || c.lambda2 > 1.0) {
            s.w_case = "i";
        } else {
            s.w_case = "ii";
            s.w.pieces = {tau};
        }
        break;
    }
    case HerveType::second: {
        const bool first_coordinate = c.wolff_index == 0;
        const WolffPiece flat = first_coordinate ? WolffPiece{PieceKind::vertical, c.alpha1, {}}
                                                 : WolffPiece{PieceKind::horizontal, {}, c.alpha1};
        s.wg_case = "ii";
        s.wg.pieces = {flat};
        if (c.alpha2) {
            s.wg.pieces.push_back(first_coordinate ? WolffPiece{PieceKind::point, c.alpha1, *c.alpha2}
                                                   : WolffPiece{PieceKind::point, *c.alpha2, c.alpha1});
        } else {
            s.note = "F has no unimodular boundary value at the slice Wolff point, so no Silov point is listed";
        }
        if (c.k2 <= 1.0) {
            s.w_case = "iii";
            s.w = s.wg;
        } else {
            s.w_case = "iv";
            s.w.pieces = {flat};
        }
        if (c.k2_borderline) {
            s.note += s.note.empty() ? "k2 is within 1e-4 of 1 (borderline)" : "; k2 is within 1e-4 of 1 (borderline)";
        }
        break;
    }
    case HerveType::third:
        s.w_case = "v";
        s.wg_case = "iii";
        s.w.pieces = {{PieceKind::vertical, c.gamma1, {}},
                      {PieceKind::point, c.gamma1, c.gamma2},
                      {PieceKind::horizontal, {}, c.gamma2}};
        s.wg = s.w;
        break;
    }
    return s;
}

GeneralizedWolffVerdict check_generalized_wolff(const BidiscMap& f, const BidiscBoundaryPoint& tau,
                                                const ComplexGeodesic& geodesic, const std::vector<double>& radii,
                                                std::size_t samples, std::uint64_t seed) {
    if (std::abs(geodesic.x().x1() - tau.x1()) > 1e-9 || std::abs(geodesic.x().x2() - tau.x2()) > 1e-9) {
        fail(ErrorCode::invalid_argument, "the geodesic does not pass through the tested point");
    }
    GeneralizedWolffVerdict v;
    Rng root(seed);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        Rng rng = root.split(i);
        const BusemannSublevel set = BusemannSublevel::of_geodesic(geodesic, radii[i]);
        RadiusReport row = check_containment(f, set, set, samples, rng);
        row.R = radii[i];
        v.pass = v.pass && row.violations == 0;
        v.radii.push_back(row);
    }
    return v;
}

std::vector<ComplexGeodesic> candidate_geodesics(const BidiscBoundaryPoint& tau) {
    std::vector<ComplexGeodesic> out;
    if (tau.on_silov_boundary()) {
        const double arg_a = std::arg(tau.x1());
        const double arg_b = std::arg(tau.x2());
        for (const double lambda : {1.0, 3.0, 1.0 / 3.0}) {
            const double r = (1.0 - lambda) / (1.0 + lambda);
            const DiscMap g = DiscMap::compose(
                DiscMap::mobius(Complex{}, arg_b),
                DiscMap::compose(DiscMap::mobius(-r, 0.0), DiscMap::mobius(Complex{}, -arg_a)));
            out.push_back(ComplexGeodesic::make(g, Orientation::first_identity, tau));
        }
    } else if (tau.unimodular(0)) {
        out.push_back(ComplexGeodesic::make(DiscMap::constant(tau.x2()), Orientation::first_identity, tau));
    } else {
        out.push_back(ComplexGeodesic::make(DiscMap::constant(tau.x1()), Orientation::second_identity, tau));
    }
    return out;
}

bool generalized_wolff_test(const BidiscMap& f, const BidiscBoundaryPoint& tau, const std::vector<double>& radii,
                            std::size_t samples, std::uint64_t seed) {
    for (const ComplexGeodesic& g : candidate_geodesics(tau)) {
        if (check_generalized_wolff(f, tau, g, radii, samples, seed).pass) {
            return true;
        }
    }
    return false;
}

std::vector<BidiscBoundaryPoint> sample_set(const WolffSet& set, Rng& rng, std::size_t per_piece) {
    std::vector<BidiscBoundaryPoint> out;
    for (const WolffPiece& p : set.pieces) {
        for (std::size_t i = 0; i < per_piece; ++i) {
            switch (p.kind) {
            case PieceKind::point: out.emplace_back(p.a, p.b); break;
            case PieceKind::vertical: out.emplace_back(p.a, rng.in_disc(0.9)); break;
            case PieceKind::horizontal: out.emplace_back(rng.in_disc(0.9), p.b); break;
            }
            if (p.kind == PieceKind::point) {
                break;
            }
        }
    }
    return out;
}

} // namespace bidisc
