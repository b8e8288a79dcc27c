#include "dlite/baselines.hpp"

#include <cmath>
#include <limits>

namespace dlite {
namespace {

double neg_xlogx(double x) { return x > 0.0 ? -x * std::log(x) : 0.0; }

}  // namespace

double shannon_entropy(const DiscreteDistribution& p) {
  double h = 0.0;
  for (double x : p) h += neg_xlogx(x);
  return h;
}

double entropy_delta(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_same_dim(p, q);
  return shannon_entropy(p) - shannon_entropy(q);
}

double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_same_dim(p, q);
  double kl = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
    kl += p[i] * std::log(p[i] / q[i]);
  }
  // Rounding can leave a tiny negative sum for P ~ Q; KL is non-negative.
  return kl < 0.0 ? 0.0 : kl;
}

double js_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_same_dim(p, q);
  // Per-inference form keeps P <-> Q symmetry exact and avoids building M.
  double js = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double mid = 0.5 * (p[i] + q[i]);
    js += neg_xlogx(mid) - 0.5 * (neg_xlogx(p[i]) + neg_xlogx(q[i]));
  }
  return js < 0.0 ? 0.0 : js;
}

}  // namespace dlite
