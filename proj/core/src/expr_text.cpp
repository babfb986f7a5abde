#include "bidisc/expr_text.hpp"

#include "bidisc/error.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace bidisc {

std::string format_double(double x) {
    if (!std::isfinite(x)) {
        fail(ErrorCode::invalid_argument, "cannot serialise a non-finite number");
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0 && !std::signbit(z.imag())) {
        return format_double(z.real());
    }
    std::string im = format_double(z.imag());
    if (im.front() != '-') {
        im.insert(im.begin(), '+');
    }
    return format_double(z.real()) + im + "j";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void parse_error(std::string_view text, const std::string& what) {
    fail(ErrorCode::parse, what + " in '" + std::string(text) + "'");
}

} // namespace

double parse_double(std::string_view text) {
    const std::string_view s = trim(text);
    std::string_view body = s;
    if (!body.empty() && body.front() == '+') {
        body.remove_prefix(1);
    }
    double value = 0.0;
    const auto res = std::from_chars(body.data(), body.data() + body.size(), value);
    if (body.empty() || res.ec != std::errc() || res.ptr != body.data() + body.size() || !std::isfinite(value)) {
        parse_error(text, "malformed number");
    }
    return value;
}

Complex parse_complex(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) {
        parse_error(text, "empty complex literal");
    }
    if (s.back() != 'j' && s.back() != 'i') {
        return {parse_double(s), 0.0};
    }
    const std::string_view body = s.substr(0, s.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imaginary = [&](std::string_view part) {
        if (part.empty() || part == "+") {
            return 1.0;
        }
        if (part == "-") {
            return -1.0;
        }
        return parse_double(part);
    };
    if (split == std::string_view::npos) {
        return {0.0, imaginary(body)};
    }
    return {parse_double(body.substr(0, split)), imaginary(body.substr(split))};
}

namespace {

std::string serialise(const detail::ExprNode& n) {
    switch (n.kind) {
    case ExprKind::constant: return "const(" + format_complex(n.c) + ")";
    case ExprKind::identity: return "z";
    case ExprKind::coordinate: return n.n == 1 ? "z1" : "z2";
    case ExprKind::mobius: return "mobius(" + format_complex(n.c) + ", " + format_double(n.phase) + ")";
    case ExprKind::power: return "power(" + std::to_string(n.n) + ")";
    case ExprKind::blaschke: {
        std::string out = "blaschke(" + format_double(n.phase);
        for (const auto& f : n.factors) {
            out += ", " + format_complex(f.zero) + ", " + std::to_string(f.multiplicity);
        }
        return out + ")";
    }
    case ExprKind::compose: return "compose(" + serialise(*n.lhs) + ", " + serialise(*n.rhs) + ")";
    case ExprKind::convex_mix:
        return "mix(" + format_double(n.t) + ", " + serialise(*n.lhs) + ", " + serialise(*n.rhs) + ")";
    case ExprKind::product: return "product(" + serialise(*n.lhs) + ", " + serialise(*n.rhs) + ")";
    }
    return {};
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    DiscMap disc() {
        const std::string_view name = identifier();
        if (name == "z" || name == "identity") {
            return DiscMap::identity();
        }
        expect('(');
        DiscMap out = DiscMap::identity();
        if (name == "const") {
            out = DiscMap::constant(parse_complex(literal()));
        } else if (name == "mobius") {
            const Complex a = parse_complex(literal());
            expect(',');
            out = DiscMap::mobius(a, parse_double(literal()));
        } else if (name == "power") {
            out = DiscMap::power(integer());
        } else if (name == "blaschke") {
            const double phase = parse_double(literal());
            std::vector<BlaschkeFactor> factors;
            while (accept(',')) {
                BlaschkeFactor f;
                f.zero = parse_complex(literal());
                expect(',');
                f.multiplicity = integer();
                factors.push_back(f);
            }
            out = DiscMap::blaschke(std::move(factors), phase);
        } else if (name == "compose") {
            DiscMap outer = disc();
            expect(',');
            out = DiscMap::compose(outer, disc());
        } else if (name == "mix" || name == "convex_mix") {
            const double t = parse_double(literal());
            expect(',');
            DiscMap f = disc();
            expect(',');
            out = DiscMap::convex_mix(t, f, disc());
        } else if (name == "product") {
            DiscMap f = disc();
            expect(',');
            out = DiscMap::product(f, disc());
        } else {
            parse_error(text_, "unknown disc map constructor '" + std::string(name) + "'");
        }
        expect(')');
        return out;
    }

    BidiscComponent component() {
        const std::string_view name = identifier();
        if (name == "z1") {
            return BidiscComponent::coordinate(1);
        }
        if (name == "z2") {
            return BidiscComponent::coordinate(2);
        }
        expect('(');
        BidiscComponent out = BidiscComponent::coordinate(1);
        if (name == "const") {
            out = BidiscComponent::constant(parse_complex(literal()));
        } else if (name == "compose") {
            DiscMap outer = disc();
            expect(',');
            out = BidiscComponent::compose(outer, component());
        } else if (name == "mix" || name == "convex_mix") {
            const double t = parse_double(literal());
            expect(',');
            BidiscComponent f = component();
            expect(',');
            out = BidiscComponent::convex_mix(t, f, component());
        } else if (name == "product") {
            BidiscComponent f = component();
            expect(',');
            out = BidiscComponent::product(f, component());
        } else {
            parse_error(text_, "unknown component constructor '" + std::string(name) +
                                   "' (disc maps enter a component through compose)");
        }
        expect(')');
        return out;
    }

    void finish() {
        skip_space();
        if (pos_ != text_.size()) {
            parse_error(text_, "trailing characters");
        }
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view identifier() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        if (start == pos_) {
            parse_error(text_, "expected a constructor name at offset " + std::to_string(start));
        }
        return text_.substr(start, pos_ - start);
    }

    std::string_view literal() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' && text_[pos_] != '(') {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    int integer() {
        const double v = parse_double(literal());
        if (v != std::floor(v) || std::abs(v) > 1e6) {
            parse_error(text_, "expected an integer");
        }
        return static_cast<int>(v);
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            parse_error(text_, std::string("expected '") + c + "' at offset " + std::to_string(pos_));
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

template <class T, class F>
T parse_with(std::string_view text, F&& body) {
    try {
        Parser p(text);
        T out = body(p);
        p.finish();
        return out;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::parse) {
            throw;
        }
        fail(ErrorCode::parse, std::string(e.what()) + " in '" + std::string(text) + "'");
    }
}

} // namespace

std::string DiscMap::to_string() const { return serialise(*node_); }
std::string BidiscComponent::to_string() const { return serialise(*node_); }

DiscMap parse_disc_map(std::string_view text) {
    return parse_with<DiscMap>(text, [](Parser& p) { return p.disc(); });
}

BidiscComponent parse_component(std::string_view text) {
    return parse_with<BidiscComponent>(text, [](Parser& p) { return p.component(); });
}

} // namespace bidisc
