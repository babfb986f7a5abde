#pragma once

#include "bidisc/disc.hpp"
#include "bidisc/scenario.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bidisc::cli {

using Json = nlohmann::ordered_json;

// 15 significant digits, the precision of printed results.
std::string num(double x);
// Limit estimates carry an extrapolation error near 1e-10 and print at 9.
std::string est(double x);
// Real numbers print without an imaginary part; 9 digits.
std::string cnum(Complex z);
std::string pair(Complex a, Complex b);
std::string pair(double a, double b);

Json tolerance_record(const Tolerances& t);

// Collects records for one command. Machine mode writes one JSON object per
// line; human mode writes the text lines followed by a version footer.
class Report {
public:
    Report(std::string command, bool machine, std::uint64_t seed, Tolerances tolerances);

    void line(std::string text);
    void record(Json j);

    void write(std::ostream& out, bool pass) const;
    // Plain queries such as distance print their values alone.
    void omit_footer() { footer_ = false; }

private:
    std::string command_;
    bool machine_;
    std::uint64_t seed_;
    Tolerances tolerances_;
    std::vector<std::string> lines_;
    std::vector<Json> records_;
    bool footer_ = true;
};

} // namespace bidisc::cli
