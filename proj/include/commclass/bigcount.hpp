#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace commclass {

/// Exact nonnegative count. Reduced-word counts overflow 64 bits by n = 9.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

/// Throws std::invalid_argument on anything but a plain decimal string.
inline BigCount parse_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  for (char c : text)
    if (c < '0' || c > '9') throw std::invalid_argument("not a decimal count: " + std::string(text));
  return BigCount(std::string(text));
}

} // namespace commclass
