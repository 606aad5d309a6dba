#include "spreadbench/format.hpp"

#include <charconv>
#include <cmath>

#include "spreadbench/error.hpp"

namespace spreadbench {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end) {
    throw ParseError("not a number: '" + text + "'", 0);
  }
  return value;
}

}  // namespace spreadbench
