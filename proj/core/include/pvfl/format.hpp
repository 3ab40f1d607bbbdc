#pragma once

#include <string>
#include <string_view>

namespace pvfl {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// Parses a whole string as a finite double. Throws ParseError otherwise.
double parse_double(std::string_view text);

/// Parses a rate given as a fraction ("0.01427") or with a percent suffix
/// ("1.427%"), returning the fraction.
double parse_rate(std::string_view text);

}  // namespace pvfl
