#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dlite::cli {

/// Usage-level failure: bad arguments, unreadable input, unwritable output.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Figure {
  kPqSurface,
  kCertaintyBinary,
  kCertaintyEquiprobable,
  kSwapBinary,
  kSwapTernary,
  kSurface3dCertainty,
  kSurface3dSwap,
};

std::optional<Figure> parse_figure(std::string_view name);
std::string_view figure_name(Figure figure);
const std::vector<std::string_view>& figure_names();

struct AxisRange {
  double start = 0.0;
  double stop = 1.0;
  std::int64_t steps = 101;
  bool log_spaced = false;
  bool probability = true;  // must lie within [0,1]
};

struct GridSpec {
  std::vector<std::string> var_names;
  std::vector<AxisRange> ranges;
  std::string output_path;  // empty means standard output

  /// Throws UsageError when an axis has steps < 2, start >= stop, or a
  /// probability axis leaves [0,1].
  void validate() const;
};

/// Default sweep for a figure. `steps`, when given, replaces every axis' count.
GridSpec default_grid(Figure figure, std::optional<std::int64_t> steps = std::nullopt);

/// Writes the figure's CSV (header + rows, LF endings) to `out`.
///
/// Columns:
///   pq-surface               p,q,dl
///   certainty-binary         p1,dl,entropy_delta,kl_q_p,js       P=(p1,1-p1) -> Q=(1,0)
///   certainty-equiprobable   m,ln_m,dl,entropy_delta,kl_q_p,js   uniform over m -> (1,0,...,0)
///   swap-binary              p1,dl,entropy_delta,kl_p_q,js       P=(p1,1-p1) -> Q=(1-p1,p1)
///   swap-ternary             p1,dl,entropy_delta,kl_p_q,js       P=(p1,2/3-p1,1/3) -> Q=(2/3-p1,p1,1/3)
///   surface-3d-certainty     p1,p2,p3,dl                         P=(p1,p2,p3) -> Q=(1,0,0)
///   surface-3d-swap          p1,p2,p3,dl                         P=(p1,p2,p3) -> Q=(p2,p1,p3)
///
/// kl_q_p is KL(Q || P), the direction that diverges as p1 -> 0 toward
/// certainty; kl_p_q is KL(P || Q). The 3-d surfaces emit only grid points
/// with p1 + p2 <= 1.
void write_figure(Figure figure, const GridSpec& grid, std::ostream& out);

/// Runs write_figure into grid.output_path (or `fallback` when empty).
/// Throws UsageError when the path cannot be written.
void emit_figure(Figure figure, const GridSpec& grid, std::ostream& fallback);

}  // namespace dlite::cli
