#include "dlite/composition.hpp"

#include <cmath>
#include <string>

#include "dlite/measures.hpp"

namespace dlite {

double closed_form_equiprobable(std::int64_t m) {
  if (m < 2) {
    throw DomainError("closed_form_equiprobable requires m >= 2, got " + std::to_string(m));
  }
  const double x = static_cast<double>(m);
  return (1.0 / (x * (x + 1.0)) - 1.0 / x) * std::log(x) + (1.0 / x - x) / (2.0 * (x + 1.0)) +
         3.0 * (x - 1.0) / (2.0 * x);
}

double closed_form_equiprobable_derivative(double m) {
  if (!(m >= 2.0)) {
    throw DomainError("closed_form_equiprobable_derivative requires m >= 2");
  }
  const double m1 = m + 1.0;
  return (m * m * std::log(m) + m + 1.0) / (m * m * m1 * m1);
}

SubsystemSpec::SubsystemSpec(DiscreteDistribution outer, std::vector<InnerPair> inner_pairs)
    : outer_(std::move(outer)), inner_pairs_(std::move(inner_pairs)) {
  if (inner_pairs_.size() != outer_.dim()) {
    throw InvalidSpec("subsystem spec needs one inner pair per outer inference: " +
                      std::to_string(inner_pairs_.size()) + " pairs for " +
                      std::to_string(outer_.dim()) + " inferences");
  }
  for (std::size_t x = 0; x < inner_pairs_.size(); ++x) {
    if (inner_pairs_[x].first.dim() != inner_pairs_[x].second.dim()) {
      throw InvalidSpec("inner pair " + std::to_string(x) + " has mismatched dimensions");
    }
  }
}

std::pair<DiscreteDistribution, DiscreteDistribution> combine_subsystems(const SubsystemSpec& spec) {
  std::vector<double> p;
  std::vector<double> q;
  for (std::size_t x = 0; x < spec.outer().dim(); ++x) {
    const double weight = spec.outer()[x];
    const auto& [inner_p, inner_q] = spec.inner_pairs()[x];
    for (std::size_t s = 0; s < inner_p.dim(); ++s) {
      p.push_back(weight * inner_p[s]);
      q.push_back(weight * inner_q[s]);
    }
  }
  return {DiscreteDistribution(std::move(p)), DiscreteDistribution(std::move(q))};
}

double weighted_subsystem_dl(const SubsystemSpec& spec) {
  double total = 0.0;
  for (std::size_t x = 0; x < spec.outer().dim(); ++x) {
    const auto& [inner_p, inner_q] = spec.inner_pairs()[x];
    total += spec.outer()[x] * dl_sum(inner_p, inner_q);
  }
  return total;
}

DiscreteDistribution joint_independent(const DiscreteDistribution& px, const DiscreteDistribution& py) {
  std::vector<double> joint;
  joint.reserve(px.dim() * py.dim());
  for (double a : px) {
    for (double b : py) joint.push_back(a * b);
  }
  return DiscreteDistribution(std::move(joint));
}

ConditionalSpec::ConditionalSpec(DiscreteDistribution marginal, std::vector<DiscreteDistribution> conditionals)
    : marginal_(std::move(marginal)), conditionals_(std::move(conditionals)) {
  if (conditionals_.size() != marginal_.dim()) {
    throw InvalidSpec("conditional spec needs one row per marginal inference");
  }
  for (const auto& row : conditionals_) {
    if (row.dim() != conditionals_.front().dim()) {
      throw InvalidSpec("conditional rows must share the same dimension");
    }
  }
}

DiscreteDistribution joint_conditional(const ConditionalSpec& spec) {
  std::vector<double> joint;
  joint.reserve(spec.marginal().dim() * spec.conditionals().front().dim());
  for (std::size_t x = 0; x < spec.marginal().dim(); ++x) {
    for (double b : spec.conditionals()[x]) joint.push_back(spec.marginal()[x] * b);
  }
  return DiscreteDistribution(std::move(joint));
}

}  // namespace dlite
