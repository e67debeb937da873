#pragma once

#include <string>
#include <string_view>

namespace qubitfit {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

/// Strict parse of a finite decimal or scientific-notation double. Leading
/// and trailing whitespace is ignored; anything else left over is an error.
/// Throws std::invalid_argument.
double parse_double(std::string_view text);

std::string_view trim(std::string_view s);

}  // namespace qubitfit
