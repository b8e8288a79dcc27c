#include "dlite_cli/compare.hpp"

#include <array>
#include <charconv>
#include <utility>

#include "dlite/baselines.hpp"
#include "dlite/measures.hpp"
#include "dlite_cli/figures.hpp"
#include "dlite_cli/format.hpp"

namespace dlite::cli {
namespace {

constexpr std::array<std::pair<Measure, std::string_view>, 7> kMeasures{{
    {Measure::kDl, "dl"},
    {Measure::kDliteDistance, "dlite-distance"},
    {Measure::kLit, "lit"},
    {Measure::kDeltaH, "delta-h"},
    {Measure::kEntropyDelta, "entropy-delta"},
    {Measure::kKl, "kl"},
    {Measure::kJs, "js"},
}};

bool is_blank(std::string_view line) { return line.find_first_not_of(" \t\r") == std::string_view::npos; }

bool is_comment(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos != std::string_view::npos && line[pos] == '#';
}

std::vector<double> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) break;
    const auto end = std::min(line.find_first_of(" \t\r", pos), line.size());
    const std::string_view token = line.substr(pos, end - pos);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "not a number: '" + std::string(token) + "'");
    }
    values.push_back(value);
    pos = end;
  }
  return values;
}

DiscreteDistribution make_distribution(std::vector<double> values, std::size_t line_no) {
  try {
    return DiscreteDistribution(std::move(values));
  } catch (const InvalidDistribution& e) {
    throw ParseError(line_no, e.what());
  }
}

}  // namespace

std::optional<Measure> parse_measure(std::string_view name) {
  for (const auto& [measure, label] : kMeasures) {
    if (label == name) return measure;
  }
  return std::nullopt;
}

std::string_view measure_name(Measure measure) {
  for (const auto& [m, label] : kMeasures) {
    if (m == measure) return label;
  }
  return "unknown";
}

const std::vector<Measure>& all_measures() {
  static const std::vector<Measure> measures = [] {
    std::vector<Measure> out;
    for (const auto& entry : kMeasures) out.push_back(entry.first);
    return out;
  }();
  return measures;
}

std::vector<Measure> parse_measure_list(std::string_view list) {
  std::vector<Measure> measures;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const auto comma = std::min(list.find(',', pos), list.size());
    const std::string_view name = list.substr(pos, comma - pos);
    const auto measure = parse_measure(name);
    if (!measure) throw UsageError("unknown measure '" + std::string(name) + "'");
    measures.push_back(*measure);
    pos = comma + 1;
  }
  return measures;
}

double evaluate(Measure measure, const DiscreteDistribution& p, const DiscreteDistribution& q) {
  switch (measure) {
    case Measure::kDl:
      return dl_sum(p, q);
    case Measure::kDliteDistance:
      return dlite_distance(p, q);
    case Measure::kLit:
      return lit_sum(p, q);
    case Measure::kDeltaH:
      return delta_h_sum(p, q);
    case Measure::kEntropyDelta:
      return entropy_delta(p, q);
    case Measure::kKl:
      return kl_divergence(p, q);
    case Measure::kJs:
      return js_divergence(p, q);
  }
  return 0.0;
}

std::vector<DistributionPair> parse_pairs(std::istream& in) {
  std::vector<DistributionPair> pairs;
  std::vector<std::pair<std::vector<double>, std::size_t>> record;

  auto flush = [&]() {
    if (record.empty()) return;
    if (record.size() != 2) {
      throw ParseError(record.front().second, "record needs exactly two lines (P and Q), found " +
                                                  std::to_string(record.size()));
    }
    auto& [p_values, p_line] = record[0];
    auto& [q_values, q_line] = record[1];
    if (p_values.size() != q_values.size()) {
      throw ParseError(q_line, "dimension mismatch: P has " + std::to_string(p_values.size()) + " entries, Q has " +
                                   std::to_string(q_values.size()));
    }
    auto p = make_distribution(std::move(p_values), p_line);
    auto q = make_distribution(std::move(q_values), q_line);
    pairs.push_back({std::move(p), std::move(q), p_line});
    record.clear();
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment(line)) continue;
    if (is_blank(line)) {
      flush();
      continue;
    }
    if (record.size() == 2) {
      throw ParseError(line_no, "record has more than two lines; separate records with a blank line");
    }
    record.emplace_back(parse_numbers(line, line_no), line_no);
  }
  flush();

  if (pairs.empty()) throw ParseError(line_no == 0 ? 1 : line_no, "no distribution pairs found");
  return pairs;
}

void write_comparison(const std::vector<DistributionPair>& pairs, const std::vector<Measure>& measures,
                      std::ostream& out) {
  out << "pair,measure,value\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (Measure m : measures) {
      out << (i + 1) << ',' << measure_name(m) << ',' << format_number(evaluate(m, pairs[i].p, pairs[i].q)) << '\n';
    }
  }
}

}  // namespace dlite::cli
