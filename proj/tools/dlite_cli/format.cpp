#include "dlite_cli/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace dlite::cli {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";

  // %.12g without trailing zeros is the shortest representation whenever that
  // needs <= 12 digits, and the 12-digit rounding otherwise.
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
  return std::string(buf.data(), result.ptr);
}

}  // namespace dlite::cli
