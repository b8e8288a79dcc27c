#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dlite/distribution.hpp"

namespace dlite {

/// DLITE of reducing m equiprobable inferences to certainty, in closed form:
///   (1/(m(m+1)) - 1/m) ln m + (1/m - m) / (2(m+1)) + 3(m-1) / (2m)
/// Strictly increasing in m and tends to 1. Requires m >= 2.
double closed_form_equiprobable(std::int64_t m);

/// d/dm of closed_form_equiprobable, (m^2 ln m + m + 1) / (m^2 (m+1)^2).
/// Accepts real m >= 2.
double closed_form_equiprobable_derivative(double m);

/// An outer distribution over X that stays fixed, and for each outer
/// inference x a pair (P_x, Q_x) of inner distributions over its subsystem.
/// Inner dimensions may differ between subsystems.
class SubsystemSpec {
 public:
  using InnerPair = std::pair<DiscreteDistribution, DiscreteDistribution>;

  SubsystemSpec(DiscreteDistribution outer, std::vector<InnerPair> inner_pairs);

  const DiscreteDistribution& outer() const noexcept { return outer_; }
  const std::vector<InnerPair>& inner_pairs() const noexcept { return inner_pairs_; }

 private:
  DiscreteDistribution outer_;
  std::vector<InnerPair> inner_pairs_;
};

/// Flattens a subsystem spec into the combined P and Q over all (x, s),
/// entry p_x * p_s, outer index major.
std::pair<DiscreteDistribution, DiscreteDistribution> combine_subsystems(const SubsystemSpec& spec);

/// sum_x p_x * DL(P_x, Q_x).
double weighted_subsystem_dl(const SubsystemSpec& spec);

/// Outer product P_X x P_Y, row-major (x major).
DiscreteDistribution joint_independent(const DiscreteDistribution& px, const DiscreteDistribution& py);

/// Marginal P_X plus one conditional row P_{Y|x} per x; all rows share |Y|.
class ConditionalSpec {
 public:
  ConditionalSpec(DiscreteDistribution marginal, std::vector<DiscreteDistribution> conditionals);

  const DiscreteDistribution& marginal() const noexcept { return marginal_; }
  const std::vector<DiscreteDistribution>& conditionals() const noexcept { return conditionals_; }

 private:
  DiscreteDistribution marginal_;
  std::vector<DiscreteDistribution> conditionals_;
};

/// p_xy = p_x * p_{y|x}, row-major (x major).
DiscreteDistribution joint_conditional(const ConditionalSpec& spec);

}  // namespace dlite
