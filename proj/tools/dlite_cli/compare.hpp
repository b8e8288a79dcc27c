#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dlite/distribution.hpp"

namespace dlite::cli {

/// Input error tied to a 1-based line of the pairs file.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class Measure { kDl, kDliteDistance, kLit, kDeltaH, kEntropyDelta, kKl, kJs };

std::optional<Measure> parse_measure(std::string_view name);
std::string_view measure_name(Measure measure);
const std::vector<Measure>& all_measures();

/// Parses a comma-separated measure list such as "dl,js". Throws UsageError.
std::vector<Measure> parse_measure_list(std::string_view list);

double evaluate(Measure measure, const DiscreteDistribution& p, const DiscreteDistribution& q);

struct DistributionPair {
  DiscreteDistribution p;
  DiscreteDistribution q;
  std::size_t line;  // line of P
};

/// Pairs file format: each record is two lines of whitespace-separated
/// decimals, P then Q; records are separated by one or more blank lines.
/// Lines whose first non-blank character is '#' are comments.
std::vector<DistributionPair> parse_pairs(std::istream& in);

/// CSV report "pair,measure,value", one row per pair per measure.
void write_comparison(const std::vector<DistributionPair>& pairs, const std::vector<Measure>& measures,
                      std::ostream& out);

}  // namespace dlite::cli
