#include "bidisc/holomap.hpp"

#include "bidisc/error.hpp"
#include "bidisc/random.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>

namespace bidisc {

Complex Rng::in_disc(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double theta = 2.0 * std::numbers::pi * uniform();
    return std::polar(r, theta);
}

DiscPoint Rng::disc_point(double max_modulus) {
    return DiscPoint(in_disc(max_modulus));
}

namespace detail {
namespace {

double one_minus_norm(Complex c) {
    const double r = std::abs(c);
    return (1.0 - r) * (1.0 + r);
}

Jet mobius_jet(Complex a, Complex rotation, const Jet& u) {
    const Complex den = 1.0 - std::conj(a) * u.value;
    const double scale = one_minus_norm(a);
    Jet out;
    out.value = rotation * (u.value - a) / den;
    out.gap = scale * u.gap / std::norm(den);
    const Complex dv = rotation * scale / (den * den);
    out.d = {dv * u.d[0], dv * u.d[1]};
    return out;
}

Jet power_jet(int n, const Jet& u) {
    Complex value{1.0, 0.0};
    Complex lower{1.0, 0.0}; // u^(n-1)
    double sum = 0.0;
    double r2k = 1.0;
    const double r2 = std::norm(u.value);
    for (int k = 0; k < n; ++k) {
        lower = value;
        value *= u.value;
        sum += r2k;
        r2k *= r2;
    }
    Jet out;
    out.value = value;
    out.gap = u.gap * sum;
    const Complex dv = static_cast<double>(n) * lower;
    out.d = {dv * u.d[0], dv * u.d[1]};
    return out;
}

Jet product_jet(const Jet& f, const Jet& g) {
    Jet out;
    out.value = f.value * g.value;
    out.gap = f.gap + std::norm(f.value) * g.gap;
    out.d = {f.d[0] * g.value + f.value * g.d[0], f.d[1] * g.value + f.value * g.d[1]};
    return out;
}

Jet mix_jet(double t, const Jet& f, const Jet& g) {
    Jet out;
    out.value = t * f.value + (1.0 - t) * g.value;
    out.gap = t * f.gap + (1.0 - t) * g.gap + t * (1.0 - t) * std::norm(f.value - g.value);
    out.d = {t * f.d[0] + (1.0 - t) * g.d[0], t * f.d[1] + (1.0 - t) * g.d[1]};
    return out;
}

} // namespace

Jet evaluate(const ExprNode& node, const Jet* inputs) {
    switch (node.kind) {
    case ExprKind::constant: {
        Jet out;
        out.value = node.c;
        out.gap = one_minus_norm(node.c);
        return out;
    }
    case ExprKind::identity:
        return inputs[0];
    case ExprKind::coordinate:
        return inputs[node.n - 1];
    case ExprKind::mobius:
        return mobius_jet(node.c, std::polar(1.0, node.phase), inputs[0]);
    case ExprKind::power:
        return power_jet(node.n, inputs[0]);
    case ExprKind::blaschke: {
        Jet acc;
        acc.value = std::polar(1.0, node.phase);
        acc.gap = 0.0;
        for (const auto& factor : node.factors) {
            const Jet m = mobius_jet(factor.zero, Complex{1.0, 0.0}, inputs[0]);
            acc = product_jet(acc, factor.multiplicity == 1 ? m : power_jet(factor.multiplicity, m));
        }
        return acc;
    }
    case ExprKind::compose: {
        const Jet inner = evaluate(*node.rhs, inputs);
        return evaluate(*node.lhs, &inner);
    }
    case ExprKind::convex_mix:
        return mix_jet(node.t, evaluate(*node.lhs, inputs), evaluate(*node.rhs, inputs));
    case ExprKind::product:
        return product_jet(evaluate(*node.lhs, inputs), evaluate(*node.rhs, inputs));
    }
    fail(ErrorCode::invalid_argument, "unknown expression node");
}

bool structurally_equal(const ExprNode& a, const ExprNode& b) {
    if (&a == &b) {
        return true;
    }
    if (a.kind != b.kind) {
        return false;
    }
    switch (a.kind) {
    case ExprKind::constant: return a.c == b.c;
    case ExprKind::identity: return true;
    case ExprKind::coordinate:
    case ExprKind::power: return a.n == b.n;
    case ExprKind::mobius: return a.c == b.c && a.phase == b.phase;
    case ExprKind::blaschke: return a.phase == b.phase && a.factors == b.factors;
    case ExprKind::convex_mix:
        if (a.t != b.t) {
            return false;
        }
        [[fallthrough]];
    case ExprKind::compose:
    case ExprKind::product:
        return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    }
    return false;
}

} // namespace detail

namespace {

using detail::ExprNode;

ExprPtr make_node(ExprNode node) {
    return std::make_shared<const ExprNode>(std::move(node));
}

void require_interior(Complex c, const char* what) {
    if (!(std::abs(c) < 1.0)) {
        fail(ErrorCode::invalid_argument, std::string(what) + " must lie in the open unit disc");
    }
}

void require_weight(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        fail(ErrorCode::invalid_argument, "convex_mix weight must lie in [0, 1]");
    }
}

Jet seed_jet(const DiscPoint& z, int slot) {
    Jet j;
    j.value = z.value();
    j.gap = z.gap();
    j.d[slot] = Complex{1.0, 0.0};
    return j;
}

bool is_identity_node(const ExprNode& n) {
    switch (n.kind) {
    case ExprKind::identity: return true;
    case ExprKind::power: return n.n == 1;
    case ExprKind::mobius: return n.c == Complex{} && std::remainder(n.phase, 2.0 * std::numbers::pi) == 0.0;
    case ExprKind::compose: return is_identity_node(*n.lhs) && is_identity_node(*n.rhs);
    default: return false;
    }
}

std::optional<Automorphism> automorphism_of(const ExprNode& n) {
    switch (n.kind) {
    case ExprKind::identity:
        return Automorphism(Complex{}, 0.0);
    case ExprKind::power:
        if (n.n == 1) {
            return Automorphism(Complex{}, 0.0);
        }
        return std::nullopt;
    case ExprKind::mobius:
        return Automorphism(n.c, n.phase);
    case ExprKind::blaschke:
        if (n.factors.size() == 1 && n.factors[0].multiplicity == 1) {
            return Automorphism(n.factors[0].zero, n.phase);
        }
        return std::nullopt;
    case ExprKind::compose: {
        const auto outer = automorphism_of(*n.lhs);
        const auto inner = automorphism_of(*n.rhs);
        if (!outer || !inner) {
            return std::nullopt;
        }
        // The composite vanishes at inner^{-1}(outer centre); its phase is the
        // argument of the derivative at 0 divided by 1 - |zero|^2 > 0.
        const Complex zero = inner->inverse()(DiscPoint(outer->center())).value();
        const Complex at0 = (*inner)(DiscPoint(Complex{})).value();
        const Complex d0 = outer->derivative(at0) * inner->derivative(Complex{});
        return Automorphism(zero, std::arg(d0));
    }
    default:
        return std::nullopt;
    }
}

} // namespace

DiscMap disc_map_from_node(ExprPtr node) { return DiscMap(std::move(node)); }
BidiscComponent component_from_node(ExprPtr node) { return BidiscComponent(std::move(node)); }

DiscMap DiscMap::constant(Complex c) {
    require_interior(c, "constant");
    ExprNode n;
    n.kind = ExprKind::constant;
    n.c = c;
    return DiscMap(make_node(std::move(n)));
}

DiscMap DiscMap::identity() {
    ExprNode n;
    n.kind = ExprKind::identity;
    return DiscMap(make_node(std::move(n)));
}

DiscMap DiscMap::mobius(Complex a, double phase) {
    require_interior(a, "Mobius centre");
    if (!std::isfinite(phase)) {
        fail(ErrorCode::invalid_argument, "Mobius phase must be finite");
    }
    ExprNode n;
    n.kind = ExprKind::mobius;
    n.c = a;
    n.phase = phase;
    return DiscMap(make_node(std::move(n)));
}

DiscMap DiscMap::power(int exponent) {
    if (exponent < 1) {
        fail(ErrorCode::invalid_argument, "power exponent must be at least 1");
    }
    ExprNode n;
    n.kind = ExprKind::power;
    n.n = exponent;
    return DiscMap(make_node(std::move(n)));
}

DiscMap DiscMap::blaschke(std::vector<BlaschkeFactor> factors, double phase) {
    if (factors.empty()) {
        fail(ErrorCode::invalid_argument, "a Blaschke product needs at least one zero (a unimodular constant is not a self-map of the open disc)");
    }
    if (!std::isfinite(phase)) {
        fail(ErrorCode::invalid_argument, "Blaschke phase must be finite");
    }
    for (const auto& f : factors) {
        require_interior(f.zero, "Blaschke zero");
        if (f.multiplicity < 1) {
            fail(ErrorCode::invalid_argument, "Blaschke multiplicity must be at least 1");
        }
    }
    ExprNode n;
    n.kind = ExprKind::blaschke;
    n.phase = phase;
    n.factors = std::move(factors);
    return DiscMap(make_node(std::move(n)));
}

DiscMap DiscMap::compose(const DiscMap& outer, const DiscMap& inner) {
    ExprNode n;
    n.kind = ExprKind::compose;
    n.lhs = outer.node_;
    n.rhs = inner.node_;
    return DiscMap(make_node(std::move(n)));
}

DiscMap DiscMap::convex_mix(double t, const DiscMap& f, const DiscMap& g) {
    require_weight(t);
    ExprNode n;
    n.kind = ExprKind::convex_mix;
    n.t = t;
    n.lhs = f.node_;
    n.rhs = g.node_;
    return DiscMap(make_node(std::move(n)));
}

DiscMap DiscMap::product(const DiscMap& f, const DiscMap& g) {
    ExprNode n;
    n.kind = ExprKind::product;
    n.lhs = f.node_;
    n.rhs = g.node_;
    return DiscMap(make_node(std::move(n)));
}

Jet DiscMap::jet(const DiscPoint& z) const {
    const Jet in = seed_jet(z, 0);
    return detail::evaluate(*node_, &in);
}

Complex DiscMap::operator()(Complex z) const { return jet(DiscPoint(z)).value; }
Complex DiscMap::derivative(Complex z) const { return jet(DiscPoint(z)).d[0]; }
DiscPoint DiscMap::operator()(const DiscPoint& z) const { return jet(z).point(); }

std::optional<Automorphism> DiscMap::as_automorphism() const { return automorphism_of(*node_); }

std::optional<DiscMap> DiscMap::inverse() const {
    const auto a = as_automorphism();
    if (!a) {
        return std::nullopt;
    }
    const Automorphism inv = a->inverse();
    return DiscMap::mobius(inv.center(), inv.phase());
}

BidiscComponent BidiscComponent::coordinate(int index) {
    if (index != 1 && index != 2) {
        fail(ErrorCode::invalid_argument, "coordinate index must be 1 or 2");
    }
    ExprNode n;
    n.kind = ExprKind::coordinate;
    n.n = index;
    return BidiscComponent(make_node(std::move(n)));
}

BidiscComponent BidiscComponent::constant(Complex c) {
    return BidiscComponent(DiscMap::constant(c).node_);
}

BidiscComponent BidiscComponent::compose(const DiscMap& outer, const BidiscComponent& inner) {
    ExprNode n;
    n.kind = ExprKind::compose;
    n.lhs = outer.node_;
    n.rhs = inner.node_;
    return BidiscComponent(make_node(std::move(n)));
}

BidiscComponent BidiscComponent::convex_mix(double t, const BidiscComponent& f, const BidiscComponent& g) {
    require_weight(t);
    ExprNode n;
    n.kind = ExprKind::convex_mix;
    n.t = t;
    n.lhs = f.node_;
    n.rhs = g.node_;
    return BidiscComponent(make_node(std::move(n)));
}

BidiscComponent BidiscComponent::product(const BidiscComponent& f, const BidiscComponent& g) {
    ExprNode n;
    n.kind = ExprKind::product;
    n.lhs = f.node_;
    n.rhs = g.node_;
    return BidiscComponent(make_node(std::move(n)));
}

Jet BidiscComponent::jet(const BidiscPoint& p) const {
    const Jet in[2] = {seed_jet(p.z1, 0), seed_jet(p.z2, 1)};
    return detail::evaluate(*node_, in);
}

Complex BidiscComponent::operator()(Complex z1, Complex z2) const {
    return jet(BidiscPoint(z1, z2)).value;
}

DiscPoint BidiscComponent::operator()(const BidiscPoint& p) const { return jet(p).point(); }

bool BidiscComponent::is_coordinate(int index) const {
    const ExprNode* n = node_.get();
    while (n->kind == ExprKind::compose && is_identity_node(*n->lhs)) {
        n = n->rhs.get();
    }
    return n->kind == ExprKind::coordinate && n->n == index;
}

BidiscMap BidiscMap::identity() {
    return BidiscMap{BidiscComponent::coordinate(1), BidiscComponent::coordinate(2)};
}

BidiscPoint BidiscMap::operator()(const BidiscPoint& p) const { return BidiscPoint(f1(p), f2(p)); }

std::array<std::array<Complex, 2>, 2> BidiscMap::jacobian(const BidiscPoint& p) const {
    const Jet a = f1.jet(p);
    const Jet b = f2.jet(p);
    return {{{a.d[0], a.d[1]}, {b.d[0], b.d[1]}}};
}

namespace {

double radical_inverse(std::uint64_t index, unsigned base) {
    double result = 0.0;
    double f = 1.0 / base;
    while (index > 0) {
        result += f * static_cast<double>(index % base);
        index /= base;
        f /= base;
    }
    return result;
}

} // namespace

SelfMapReport validate_self_map(const BidiscMap& f, std::size_t n_samples, std::uint64_t seed) {
    Rng rng(seed);
    double shift[4];
    for (double& s : shift) {
        s = rng.uniform();
    }

    std::vector<BidiscPoint> points;
    points.reserve(n_samples + 9 * 16);
    for (std::size_t i = 1; i <= n_samples; ++i) {
        double u[4];
        const unsigned bases[4] = {2, 3, 5, 7};
        for (int d = 0; d < 4; ++d) {
            u[d] = std::fmod(radical_inverse(i, bases[d]) + shift[d], 1.0);
        }
        // Radii are capped so raw construction stays clear of the rejection margin.
        const double r1 = std::min(std::sqrt(u[0]), 1.0 - 1e-12);
        const double r2 = std::min(std::sqrt(u[1]), 1.0 - 1e-12);
        points.emplace_back(std::polar(r1, 2.0 * std::numbers::pi * u[2]),
                            std::polar(r2, 2.0 * std::numbers::pi * u[3]));
    }
    for (int k = 1; k <= 9; ++k) {
        const double defect = std::pow(10.0, -k);
        for (int j = 0; j < 16; ++j) {
            const Complex dir1 = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
            const Complex dir2 = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
            const DiscPoint shell1 = DiscPoint::radial(dir1, defect);
            const DiscPoint shell2 = DiscPoint::radial(dir2, defect);
            switch (j % 3) {
            case 0: points.emplace_back(shell1, rng.disc_point()); break;
            case 1: points.emplace_back(rng.disc_point(), shell2); break;
            default: points.emplace_back(shell1, shell2); break;
            }
        }
    }

    SelfMapReport report;
    for (const auto& p : points) {
        ++report.samples;
        bool bad = false;
        try {
            for (int c = 0; c < 2; ++c) {
                const Jet j = f.component(c).jet(p);
                const double m = std::abs(j.value);
                report.max_modulus = std::max(report.max_modulus, std::isfinite(m) ? m : INFINITY);
                if (!(m < 1.0) || !(j.gap > 0.0)) {
                    bad = true;
                }
            }
        } catch (const Error&) {
            bad = true;
        }
        if (bad) {
            report.violations.push_back({p.z1.value(), p.z2.value()});
        }
    }
    report.pass = report.violations.empty() && report.max_modulus < 1.0;
    return report;
}

} // namespace bidisc
