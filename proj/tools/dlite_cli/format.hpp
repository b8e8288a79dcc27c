#pragma once

#include <string>

namespace dlite::cli {

/// Shortest round-trip decimal, capped at 12 significant digits; always '.'
/// as separator, "inf"/"-inf"/"nan" for non-finite values, and -0 printed as 0.
std::string format_number(double value);

}  // namespace dlite::cli
