#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "dlite/distribution.hpp"

// Ground truth that does not share code paths with the closed forms:
// quadrature of the defining integrals, the non-negativity g-function,
// random distribution generators and brute-force triangle searches.
namespace dlite::oracle {

/// Composite Simpson's rule, applied after the substitution t = u^2 so the
/// logarithmic singularity of -ln t at 0 becomes integrable by a smooth rule.
/// Integration runs on [max(lo, kLowerCutoff), hi]; the piece below the cutoff
/// is added from its analytic antiderivative.
struct QuadratureConfig {
  std::int64_t subdivisions = 100'000;  // even, >= 2
};

inline constexpr double kLowerCutoff = 1e-12;

/// |integral of -ln t over [p, q]|.
double lit_by_integration(Probability p, Probability q, const QuadratureConfig& cfg = {});

/// |p - q| * (integral of -t ln t) / (integral of t), both over [p, q]; 0 when p = q.
double delta_h_by_integration(Probability p, Probability q, const QuadratureConfig& cfg = {});

/// g(x, c) = x(1 - ln x) - c(1 - ln c) - (x^2(1 - 2 ln x) - c^2(1 - 2 ln c)) / (2(x + c))
/// for x >= c >= 0, evaluated term by term as written. g >= 0 with equality iff x = c.
double g_function(double x, double c);

/// Grid scan of f(r) = r - exp((r^2 - 1)/2) on (0, r_max]. Reports every grid
/// point where f is within `zero_tol` of 0 or changes sign, and the largest f seen.
struct FixedPointScan {
  std::vector<double> roots;
  double max_value = 0.0;
};
FixedPointScan scan_fixed_point(double r_max = 3.0, std::int64_t steps = 300'000, double zero_tol = 1e-12);

/// Exponential samples normalized onto the simplex. With probability
/// `sparse_fraction` the draw is sparse: each entry is zeroed with probability
/// 0.4, keeping at least one positive entry.
DiscreteDistribution random_distribution(std::mt19937_64& rng, std::size_t dim, double sparse_fraction = 0.25);

/// Engine for trial `trial` of a run seeded with `seed`; trials are independent
/// and reproducible in isolation. `stream` separates unrelated consumers of
/// one seed.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial, std::uint32_t stream = 0);

struct DimRange {
  std::size_t lo = 2;
  std::size_t hi = 10;
};

using DistanceFn = std::function<double(const DiscreteDistribution&, const DiscreteDistribution&)>;

struct TriangleViolation {
  DiscreteDistribution p;
  DiscreteDistribution q;
  DiscreteDistribution r;
  std::uint64_t seed;
  std::uint64_t trial;
  double excess;  // d(P,R) - d(P,Q) - d(Q,R)
};

/// Random search for (P, Q, R) with d(P,Q) + d(Q,R) < d(P,R) - slack.
/// Returns the first violation found, or nullopt. Throws DomainError for
/// trials < 1 or an invalid dimension range.
std::optional<TriangleViolation> search_triangle_violation(const DistanceFn& distance, DimRange dims,
                                                           std::int64_t trials, std::uint64_t seed,
                                                           double slack = 1e-12);

inline std::optional<TriangleViolation> search_triangle_violation(const DistanceFn& distance, std::size_t dim,
                                                                  std::int64_t trials, std::uint64_t seed,
                                                                  double slack = 1e-12) {
  return search_triangle_violation(distance, DimRange{dim, dim}, trials, seed, slack);
}

}  // namespace dlite::oracle
