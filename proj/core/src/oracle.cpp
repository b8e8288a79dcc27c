#include "dlite/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dlite::oracle {
namespace {

struct Integrals {
  double neg_log = 0.0;    // integral of -ln t
  double neg_tlogt = 0.0;  // integral of -t ln t
  double identity = 0.0;   // integral of t
};

// Antiderivatives from 0, used only below kLowerCutoff.
Integrals tail_from_zero(double x) {
  if (x <= 0.0) return {};
  const double lx = std::log(x);
  return {x * (1.0 - lx), x * x * (1.0 - 2.0 * lx) / 4.0, x * x / 2.0};
}

// Integrands after t = u^2, dt = 2u du.
Integrals substituted_integrands(double u) {
  if (u <= 0.0) return {};
  const double lu = std::log(u);
  const double u3 = u * u * u;
  return {-4.0 * u * lu, -4.0 * u3 * lu, 2.0 * u3};
}

Integrals integrate(double a, double b, const QuadratureConfig& cfg) {
  if (cfg.subdivisions < 2 || cfg.subdivisions % 2 != 0) {
    throw DomainError("quadrature subdivisions must be even and >= 2, got " + std::to_string(cfg.subdivisions));
  }
  if (a == b) return {};

  const double lo = std::max(a, kLowerCutoff);
  if (b <= lo) {
    const Integrals tb = tail_from_zero(b);
    const Integrals ta = tail_from_zero(a);
    return {tb.neg_log - ta.neg_log, tb.neg_tlogt - ta.neg_tlogt, tb.identity - ta.identity};
  }

  Integrals total;
  if (a < lo) {
    const Integrals tl = tail_from_zero(lo);
    const Integrals ta = tail_from_zero(a);
    total = {tl.neg_log - ta.neg_log, tl.neg_tlogt - ta.neg_tlogt, tl.identity - ta.identity};
  }

  const double u0 = std::sqrt(lo);
  const double u1 = std::sqrt(b);
  const std::int64_t n = cfg.subdivisions;
  const double h = (u1 - u0) / static_cast<double>(n);

  Integrals sum;
  auto accumulate = [&sum](const Integrals& f, double weight) {
    sum.neg_log += weight * f.neg_log;
    sum.neg_tlogt += weight * f.neg_tlogt;
    sum.identity += weight * f.identity;
  };
  accumulate(substituted_integrands(u0), 1.0);
  accumulate(substituted_integrands(u1), 1.0);
  for (std::int64_t k = 1; k < n; ++k) {
    accumulate(substituted_integrands(u0 + h * static_cast<double>(k)), (k % 2 == 1) ? 4.0 : 2.0);
  }

  total.neg_log += sum.neg_log * h / 3.0;
  total.neg_tlogt += sum.neg_tlogt * h / 3.0;
  total.identity += sum.identity * h / 3.0;
  return total;
}

}  // namespace

double lit_by_integration(Probability p, Probability q, const QuadratureConfig& cfg) {
  const double lo = std::min(p.value(), q.value());
  const double hi = std::max(p.value(), q.value());
  return std::abs(integrate(lo, hi, cfg).neg_log);
}

double delta_h_by_integration(Probability p, Probability q, const QuadratureConfig& cfg) {
  if (p.value() == q.value()) return 0.0;
  const double lo = std::min(p.value(), q.value());
  const double hi = std::max(p.value(), q.value());
  const Integrals in = integrate(lo, hi, cfg);
  return (hi - lo) * in.neg_tlogt / in.identity;
}

double g_function(double x, double c) {
  if (!(c >= 0.0) || !(x >= c)) {
    throw DomainError("g_function requires x >= c >= 0");
  }
  if (x + c == 0.0) return 0.0;
  auto xlogx = [](double v) { return v > 0.0 ? v * std::log(v) : 0.0; };
  const double lit_part = (x - xlogx(x)) - (c - xlogx(c));
  const double discount = (x * x - 2.0 * x * xlogx(x)) - (c * c - 2.0 * c * xlogx(c));
  return lit_part - discount / (2.0 * (x + c));
}

FixedPointScan scan_fixed_point(double r_max, std::int64_t steps, double zero_tol) {
  FixedPointScan scan;
  scan.max_value = -std::numeric_limits<double>::infinity();
  double prev = 0.0;
  for (std::int64_t k = 1; k <= steps; ++k) {
    const double r = r_max * static_cast<double>(k) / static_cast<double>(steps);
    const double f = r - std::exp((r * r - 1.0) / 2.0);
    scan.max_value = std::max(scan.max_value, f);
    const bool near_zero = std::abs(f) <= zero_tol;
    const bool crossed = k > 1 && ((prev < 0.0 && f > 0.0) || (prev > 0.0 && f < 0.0));
    if (near_zero || crossed) scan.roots.push_back(r);
    prev = f;
  }
  return scan;
}

DiscreteDistribution random_distribution(std::mt19937_64& rng, std::size_t dim, double sparse_fraction) {
  if (dim == 0) throw DomainError("random_distribution requires dim >= 1");
  std::exponential_distribution<double> draw(1.0);
  std::bernoulli_distribution sparse(sparse_fraction);
  std::bernoulli_distribution zero_entry(0.4);

  std::vector<double> probs(dim);
  for (double& p : probs) p = draw(rng);

  if (sparse(rng)) {
    for (double& p : probs) {
      if (zero_entry(rng)) p = 0.0;
    }
    if (std::all_of(probs.begin(), probs.end(), [](double p) { return p == 0.0; })) {
      std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
      probs[pick(rng)] = 1.0;
    }
  }

  double sum = 0.0;
  for (double p : probs) sum += p;
  for (double& p : probs) p /= sum;
  return DiscreteDistribution(std::move(probs));
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32), stream};
  return std::mt19937_64(seq);
}

std::optional<TriangleViolation> search_triangle_violation(const DistanceFn& distance, DimRange dims,
                                                           std::int64_t trials, std::uint64_t seed,
                                                           double slack) {
  if (trials < 1) throw DomainError("search_triangle_violation requires trials >= 1");
  if (dims.lo < 2 || dims.hi < dims.lo) throw DomainError("search_triangle_violation requires 2 <= lo <= hi");

  for (std::int64_t t = 0; t < trials; ++t) {
    const auto trial = static_cast<std::uint64_t>(t);
    auto rng = trial_engine(seed, trial);
    std::uniform_int_distribution<std::size_t> pick_dim(dims.lo, dims.hi);
    const std::size_t dim = pick_dim(rng);
    auto p = random_distribution(rng, dim);
    auto q = random_distribution(rng, dim);
    auto r = random_distribution(rng, dim);
    const double excess = distance(p, r) - distance(p, q) - distance(q, r);
    if (excess > slack) {
      return TriangleViolation{std::move(p), std::move(q), std::move(r), seed, trial, excess};
    }
  }
  return std::nullopt;
}

}  // namespace dlite::oracle
