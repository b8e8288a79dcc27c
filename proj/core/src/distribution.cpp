#include "dlite/distribution.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace dlite {

Probability::Probability(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError("probability out of [0,1]: " + std::to_string(value));
  }
}

DiscreteDistribution::DiscreteDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw InvalidDistribution("distribution must have at least one inference");
  }
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const double p = probs_[i];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvalidDistribution("entry " + std::to_string(i) + " out of [0,1]: " + std::to_string(p));
    }
  }
  const double sum = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "entries sum to " << sum << ", expected 1";
    throw InvalidDistribution(msg.str());
  }
}

DiscreteDistribution::DiscreteDistribution(std::initializer_list<double> probs)
    : DiscreteDistribution(std::vector<double>(probs)) {}

DiscreteDistribution DiscreteDistribution::equiprobable(std::size_t m) {
  if (m == 0) {
    throw InvalidDistribution("equiprobable distribution needs m >= 1");
  }
  return DiscreteDistribution(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

DiscreteDistribution DiscreteDistribution::certainty(std::size_t m, std::size_t index) {
  if (index >= m) {
    throw InvalidDistribution("certainty index outside the support");
  }
  std::vector<double> probs(m, 0.0);
  probs[index] = 1.0;
  return DiscreteDistribution(std::move(probs));
}

void require_same_dim(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  if (p.dim() != q.dim()) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(p.dim()) + " vs " +
                            std::to_string(q.dim()));
  }
}

std::string to_string(const DiscreteDistribution& dist) {
  std::ostringstream out;
  out.precision(17);
  out << '(';
  for (std::size_t i = 0; i < dist.dim(); ++i) {
    if (i != 0) out << ", ";
    out << dist[i];
  }
  out << ')';
  return out.str();
}

}  // namespace dlite
