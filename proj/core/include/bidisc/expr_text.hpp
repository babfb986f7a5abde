#pragma once

// Prefix text form of expression trees, used by scenario files.
//
//   disc      := z | const(C) | mobius(C, R) | power(N)
//              | blaschke(R {, C, N}) | compose(disc, disc)
//              | mix(R, disc, disc) | product(disc, disc)
//   component := z1 | z2 | const(C) | compose(disc, component)
//              | mix(R, component, component) | product(component, component)
//
// Complex literals are written re+imj (e.g. 0.5, -0.25+1e-3j, 2j).

#include "bidisc/holomap.hpp"

#include <string>
#include <string_view>

namespace bidisc {

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);
std::string format_complex(Complex z);
Complex parse_complex(std::string_view text);
double parse_double(std::string_view text);

DiscMap parse_disc_map(std::string_view text);
BidiscComponent parse_component(std::string_view text);

} // namespace bidisc
