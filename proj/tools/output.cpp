#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace bidisc::cli {

namespace {

std::string digits(double x, int n) {
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", n, x == 0.0 ? 0.0 : x);
    return buf;
}

} // namespace

std::string num(double x) { return digits(x, 15); }
std::string est(double x) { return digits(x, 9); }

std::string cnum(Complex z) {
    const double scale = std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) <= 1e-12 * scale) {
        return est(z.real());
    }
    if (std::abs(z.real()) <= 1e-12 * scale) {
        return est(z.imag()) + "i";
    }
    const std::string im = est(z.imag());
    return est(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

std::string pair(Complex a, Complex b) { return "(" + cnum(a) + ", " + cnum(b) + ")"; }
std::string pair(double a, double b) { return "(" + est(a) + ", " + est(b) + ")"; }

Json tolerance_record(const Tolerances& t) {
    return Json{{"limit", t.limit}, {"containment", t.containment}, {"ratio", t.ratio}, {"lindelof", t.lindelof}};
}

Report::Report(std::string command, bool machine, std::uint64_t seed, Tolerances tolerances)
    : command_(std::move(command)), machine_(machine), seed_(seed), tolerances_(tolerances) {}

void Report::line(std::string text) { lines_.push_back(std::move(text)); }

void Report::record(Json j) { records_.push_back(std::move(j)); }

void Report::write(std::ostream& out, bool pass) const {
    if (machine_) {
        Json header;
        header["record"] = "header";
        header["tool"] = "bidisc";
        header["version"] = BIDISC_VERSION_STRING;
        header["command"] = command_;
        header["seed"] = seed_;
        header["tolerances"] = tolerance_record(tolerances_);
        out << header.dump() << '\n';
        for (const Json& r : records_) {
            out << r.dump() << '\n';
        }
        out << Json{{"record", "summary"}, {"pass", pass}}.dump() << '\n';
        return;
    }
    for (const std::string& l : lines_) {
        out << l << '\n';
    }
    if (!footer_) {
        return;
    }
    out << "-- bidisc " << BIDISC_VERSION_STRING << "; seed " << seed_ << "; tolerances limit " << num(tolerances_.limit)
        << ", containment " << num(tolerances_.containment) << ", ratio " << num(tolerances_.ratio) << ", lindelof "
        << num(tolerances_.lindelof) << '\n';
}

} // namespace bidisc::cli
