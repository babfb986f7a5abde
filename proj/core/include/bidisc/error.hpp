#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bidisc {

enum class ErrorCode {
    domain,                    // a point left the open disc / bidisc
    invalid_argument,          // constructor or parameter invariant violated
    parse,                     // malformed expression or scenario text
    not_converged,             // a radial limit did not settle on the schedule
    hypothesis_violated,       // a theorem precondition failed (e.g. both lambdas infinite)
    curve_not_admissible,      // a curve is not g-special and g-restricted
    no_converged_reference,    // Lindelof check found no reference limit
    interior_fixed_point,      // orbit stabilised inside the bidisc
    ambiguous_slice,           // slice solver could not decide between fixed point and Wolff point
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace bidisc
