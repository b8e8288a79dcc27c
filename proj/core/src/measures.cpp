#include "dlite/measures.hpp"

#include <algorithm>
#include <cmath>

namespace dlite {
namespace {

// x ln x and x^2 ln x with their limits at 0.
double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }
double x2logx(double x) { return x > 0.0 ? x * x * std::log(x) : 0.0; }

// sum_{k>=3} 2 t^k / (k (k - 1)) = 1 - r^2 + 2 r ln r with r = 1 - t.
double reduced_numerator_series(double t) {
  double power = t * t * t;
  double sum = 0.0;
  for (int k = 3; k < 200; ++k) {
    const double term = 2.0 * power / (static_cast<double>(k) * (k - 1));
    sum += term;
    if (term <= sum * 1e-18) break;
    power *= t;
  }
  return sum;
}

constexpr double kSeriesCutoff = 0.25;

double clamp_small_negative(double value) {
  if (value < -kClampTolerance) {
    throw InternalError("dl_pair produced a negative value beyond the clamp tolerance");
  }
  return value < 0.0 ? 0.0 : value;
}

}  // namespace

double lit_pair(Probability p, Probability q) {
  const double a = p.value() - xlogx(p.value());
  const double b = q.value() - xlogx(q.value());
  return std::abs(a - b);
}

double delta_h_pair(Probability p, Probability q) {
  const double sum = p.value() + q.value();
  if (sum == 0.0) return 0.0;
  const double a = p.value() * p.value() - 2.0 * x2logx(p.value());
  const double b = q.value() * q.value() - 2.0 * x2logx(q.value());
  return std::abs(a - b) / (2.0 * sum);
}

double dl_pair(Probability p, Probability q) {
  const double hi = std::max(p.value(), q.value());
  const double lo = std::min(p.value(), q.value());
  if (hi == lo) return 0.0;
  if (lo == 0.0) return 0.5 * hi;

  const double ratio = lo / hi;
  const double t = (hi - lo) / hi;
  const double numerator = t < kSeriesCutoff ? reduced_numerator_series(t)
                                             : t * (1.0 + ratio) + 2.0 * ratio * std::log(ratio);
  return clamp_small_negative(hi * numerator / (2.0 * (1.0 + ratio)));
}

MeasureReport dl_total(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_same_dim(p, q);
  MeasureReport report;
  report.per_inference.reserve(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    InferenceMeasures m{lit_pair(p[i], q[i]), delta_h_pair(p[i], q[i]), dl_pair(p[i], q[i])};
    report.lit_total += m.lit;
    report.delta_h_total += m.delta_h;
    report.dl_total += m.dl;
    report.per_inference.push_back(m);
  }
  report.dlite_distance = std::cbrt(report.dl_total);
  return report;
}

double dl_sum(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_same_dim(p, q);
  double total = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) total += dl_pair(p[i], q[i]);
  return total;
}

double dlite_distance(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  return std::cbrt(dl_sum(p, q));
}

double lit_sum(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_same_dim(p, q);
  double total = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) total += lit_pair(p[i], q[i]);
  return total;
}

double delta_h_sum(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_same_dim(p, q);
  double total = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) total += delta_h_pair(p[i], q[i]);
  return total;
}

}  // namespace dlite
