#include "dlite_cli/figures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dlite/baselines.hpp"
#include "dlite/measures.hpp"
#include "dlite_cli/format.hpp"

namespace dlite::cli {
namespace {

struct FigureInfo {
  Figure figure;
  std::string_view name;
};

constexpr std::array kFigures{
    FigureInfo{Figure::kPqSurface, "pq-surface"},
    FigureInfo{Figure::kCertaintyBinary, "certainty-binary"},
    FigureInfo{Figure::kCertaintyEquiprobable, "certainty-equiprobable"},
    FigureInfo{Figure::kSwapBinary, "swap-binary"},
    FigureInfo{Figure::kSwapTernary, "swap-ternary"},
    FigureInfo{Figure::kSurface3dCertainty, "surface-3d-certainty"},
    FigureInfo{Figure::kSurface3dSwap, "surface-3d-swap"},
};

double axis_value(const AxisRange& axis, std::int64_t i) {
  if (i == axis.steps - 1) return axis.stop;
  const double frac = static_cast<double>(i) / static_cast<double>(axis.steps - 1);
  if (axis.log_spaced) {
    return std::exp(std::log(axis.start) + (std::log(axis.stop) - std::log(axis.start)) * frac);
  }
  return axis.start + (axis.stop - axis.start) * frac;
}

void write_row(std::ostream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out << ',';
    out << format_number(v);
    first = false;
  }
  out << '\n';
}

void write_comparison_row(std::ostream& out, double x, const DiscreteDistribution& p, const DiscreteDistribution& q,
                          double kl) {
  write_row(out, {x, dl_sum(p, q), entropy_delta(p, q), kl, js_divergence(p, q)});
}

void pq_surface(const GridSpec& grid, std::ostream& out) {
  out << "p,q,dl\n";
  for (std::int64_t i = 0; i < grid.ranges[0].steps; ++i) {
    const double p = axis_value(grid.ranges[0], i);
    for (std::int64_t j = 0; j < grid.ranges[1].steps; ++j) {
      const double q = axis_value(grid.ranges[1], j);
      write_row(out, {p, q, dl_pair(p, q)});
    }
  }
}

void certainty_binary(const GridSpec& grid, std::ostream& out) {
  out << "p1,dl,entropy_delta,kl_q_p,js\n";
  const DiscreteDistribution certain{1.0, 0.0};
  for (std::int64_t i = 0; i < grid.ranges[0].steps; ++i) {
    const double p1 = axis_value(grid.ranges[0], i);
    const DiscreteDistribution p{p1, 1.0 - p1};
    write_comparison_row(out, p1, p, certain, kl_divergence(certain, p));
  }
}

void certainty_equiprobable(const GridSpec& grid, std::ostream& out) {
  const AxisRange& axis = grid.ranges[0];
  if (axis.start < 2.0) throw UsageError("certainty-equiprobable needs m >= 2");
  out << "m,ln_m,dl,entropy_delta,kl_q_p,js\n";
  std::int64_t last = 0;
  for (std::int64_t i = 0; i < axis.steps; ++i) {
    const auto m = static_cast<std::int64_t>(std::llround(axis_value(axis, i)));
    if (m == last) continue;
    last = m;
    const auto size = static_cast<std::size_t>(m);
    const auto p = DiscreteDistribution::equiprobable(size);
    const auto q = DiscreteDistribution::certainty(size);
    const double mm = static_cast<double>(m);
    write_row(out, {mm, std::log(mm), dl_sum(p, q), entropy_delta(p, q), kl_divergence(q, p), js_divergence(p, q)});
  }
}

void swap_binary(const GridSpec& grid, std::ostream& out) {
  out << "p1,dl,entropy_delta,kl_p_q,js\n";
  for (std::int64_t i = 0; i < grid.ranges[0].steps; ++i) {
    const double p1 = axis_value(grid.ranges[0], i);
    const DiscreteDistribution p{p1, 1.0 - p1};
    const DiscreteDistribution q{1.0 - p1, p1};
    write_comparison_row(out, p1, p, q, kl_divergence(p, q));
  }
}

void swap_ternary(const GridSpec& grid, std::ostream& out) {
  out << "p1,dl,entropy_delta,kl_p_q,js\n";
  constexpr double kFixed = 1.0 / 3.0;
  constexpr double kSwapped = 2.0 / 3.0;
  for (std::int64_t i = 0; i < grid.ranges[0].steps; ++i) {
    const double p1 = axis_value(grid.ranges[0], i);
    const double p2 = std::max(0.0, kSwapped - p1);
    const DiscreteDistribution p{p1, p2, kFixed};
    const DiscreteDistribution q{p2, p1, kFixed};
    write_comparison_row(out, p1, p, q, kl_divergence(p, q));
  }
}

template <typename MakeTarget>
void surface_3d(const GridSpec& grid, std::ostream& out, MakeTarget make_target) {
  out << "p1,p2,p3,dl\n";
  for (std::int64_t i = 0; i < grid.ranges[0].steps; ++i) {
    const double p1 = axis_value(grid.ranges[0], i);
    for (std::int64_t j = 0; j < grid.ranges[1].steps; ++j) {
      const double p2 = axis_value(grid.ranges[1], j);
      if (p1 + p2 > 1.0 + 1e-12) continue;
      const double p3 = std::max(0.0, 1.0 - p1 - p2);
      const DiscreteDistribution p{p1, p2, p3};
      write_row(out, {p1, p2, p3, dl_sum(p, make_target(p1, p2, p3))});
    }
  }
}

}  // namespace

std::optional<Figure> parse_figure(std::string_view name) {
  for (const auto& info : kFigures) {
    if (info.name == name) return info.figure;
  }
  return std::nullopt;
}

std::string_view figure_name(Figure figure) {
  for (const auto& info : kFigures) {
    if (info.figure == figure) return info.name;
  }
  return "unknown";
}

const std::vector<std::string_view>& figure_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& info : kFigures) out.push_back(info.name);
    return out;
  }();
  return names;
}

void GridSpec::validate() const {
  if (var_names.size() != ranges.size()) throw UsageError("grid has mismatched axis names and ranges");
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    const auto& axis = ranges[i];
    const std::string& name = var_names[i];
    if (axis.steps < 2) throw UsageError("axis " + name + " needs at least 2 steps");
    if (!(axis.start < axis.stop)) throw UsageError("axis " + name + " needs start < stop");
    if (axis.probability && (axis.start < 0.0 || axis.stop > 1.0)) {
      throw UsageError("probability axis " + name + " must lie within [0,1]");
    }
    if (axis.log_spaced && axis.start <= 0.0) throw UsageError("log-spaced axis " + name + " needs start > 0");
  }
}

GridSpec default_grid(Figure figure, std::optional<std::int64_t> steps) {
  GridSpec grid;
  switch (figure) {
    case Figure::kPqSurface:
      grid.var_names = {"p", "q"};
      grid.ranges = {AxisRange{0.0, 1.0, 101}, AxisRange{0.0, 1.0, 101}};
      break;
    case Figure::kCertaintyBinary:
    case Figure::kSwapBinary:
      grid.var_names = {"p1"};
      grid.ranges = {AxisRange{0.0, 1.0, 101}};
      break;
    case Figure::kCertaintyEquiprobable:
      grid.var_names = {"m"};
      grid.ranges = {AxisRange{2.0, 1e4, 100, true, false}};
      break;
    case Figure::kSwapTernary:
      grid.var_names = {"p1"};
      grid.ranges = {AxisRange{0.0, 2.0 / 3.0, 101}};
      break;
    case Figure::kSurface3dCertainty:
    case Figure::kSurface3dSwap:
      grid.var_names = {"p1", "p2"};
      grid.ranges = {AxisRange{0.0, 1.0, 51}, AxisRange{0.0, 1.0, 51}};
      break;
  }
  if (steps) {
    for (auto& axis : grid.ranges) axis.steps = *steps;
  }
  return grid;
}

void write_figure(Figure figure, const GridSpec& grid, std::ostream& out) {
  grid.validate();
  const std::size_t axes = (figure == Figure::kPqSurface || figure == Figure::kSurface3dCertainty ||
                            figure == Figure::kSurface3dSwap)
                               ? 2
                               : 1;
  if (grid.ranges.size() != axes) {
    throw UsageError("figure " + std::string(figure_name(figure)) + " needs " + std::to_string(axes) + " axes");
  }

  switch (figure) {
    case Figure::kPqSurface:
      pq_surface(grid, out);
      break;
    case Figure::kCertaintyBinary:
      certainty_binary(grid, out);
      break;
    case Figure::kCertaintyEquiprobable:
      certainty_equiprobable(grid, out);
      break;
    case Figure::kSwapBinary:
      swap_binary(grid, out);
      break;
    case Figure::kSwapTernary:
      swap_ternary(grid, out);
      break;
    case Figure::kSurface3dCertainty:
      surface_3d(grid, out, [](double, double, double) { return DiscreteDistribution{1.0, 0.0, 0.0}; });
      break;
    case Figure::kSurface3dSwap:
      surface_3d(grid, out, [](double p1, double p2, double p3) { return DiscreteDistribution{p2, p1, p3}; });
      break;
  }
}

void emit_figure(Figure figure, const GridSpec& grid, std::ostream& fallback) {
  if (grid.output_path.empty()) {
    write_figure(figure, grid, fallback);
    return;
  }
  std::ostringstream buffer;
  write_figure(figure, grid, buffer);
  std::ofstream file(grid.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open " + grid.output_path + " for writing");
  file << buffer.str();
  if (!file.flush()) throw UsageError("failed writing " + grid.output_path);
}

}  // namespace dlite::cli
