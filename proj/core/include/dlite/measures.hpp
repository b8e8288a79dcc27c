#pragma once

#include <vector>

#include "dlite/distribution.hpp"

namespace dlite {

/// Negative results from cancellation down to this magnitude are clamped to 0.
inline constexpr double kClampTolerance = 1e-12;

/// Least information for a single probability change:
/// |p(1 - ln p) - q(1 - ln q)|, with x ln x taken as 0 at x = 0.
double lit_pair(Probability p, Probability q);

/// Entropy discount for a single probability change:
/// |p^2(1 - 2 ln p) - q^2(1 - 2 ln q)| / (2(p + q)), and 0 at p = q = 0.
double delta_h_pair(Probability p, Probability q);

/// DLITE for a single probability change, lit_pair - delta_h_pair, in [0, 0.5].
///
/// Evaluated through the reduced form
///   (M^2 - m^2 + 2 m M ln(m / M)) / (2 (M + m)),   M = max(p,q), m = min(p,q)
/// which equals the difference exactly but does not cancel catastrophically as
/// p approaches q. Near M = m the numerator is summed as the series
/// M^2 * sum_{k>=3} 2 t^k / (k (k - 1)) with t = 1 - m/M.
double dl_pair(Probability p, Probability q);

struct InferenceMeasures {
  double lit = 0.0;
  double delta_h = 0.0;
  double dl = 0.0;
};

struct MeasureReport {
  std::vector<InferenceMeasures> per_inference;
  double lit_total = 0.0;
  double delta_h_total = 0.0;
  double dl_total = 0.0;
  double dlite_distance = 0.0;  // cube root of dl_total
};

/// Per-inference and total LIT, entropy discount and DLITE for P -> Q.
MeasureReport dl_total(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// DLITE total only; same value as dl_total(p, q).dl_total without the report.
double dl_sum(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// Cube root of DLITE, a metric on distributions of equal dimension.
double dlite_distance(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// LIT(P, Q): sum of lit_pair over inferences.
double lit_sum(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// Entropy discount total: sum of delta_h_pair over inferences.
double delta_h_sum(const DiscreteDistribution& p, const DiscreteDistribution& q);

}  // namespace dlite
