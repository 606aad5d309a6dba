#pragma once

#include <string>

namespace spreadbench {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

/// Strict full-string parse; throws ParseError on trailing garbage.
double parse_double(const std::string& text);

}  // namespace spreadbench
