#include "dlite_cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "dlite/composition.hpp"
#include "dlite/measures.hpp"
#include "dlite_cli/figures.hpp"
#include "dlite_cli/format.hpp"

namespace dlite::cli {
namespace {

constexpr double kIdentityTol = 1e-12;
constexpr double kSymmetryTol = 1e-15;
constexpr double kBoundSlack = 1e-12;
constexpr double kOracleTol = 1e-6;
constexpr double kClosedFormTol = 1e-9;
constexpr std::int64_t kOracleCases = 200;
constexpr std::int64_t kClosedFormMaxM = 2000;

enum Stream : std::uint32_t {
  kPairs = 1,
  kScaling,
  kTriangle,
  kSubsystem,
  kIndependent,
  kMarginal,
  kConditionalRows,
  kOracle,
};

class Property {
 public:
  explicit Property(std::string name) { result_.name = std::move(name); }

  // Records one case; `deviation` is how far past the tolerance it went (<= 0 passes).
  void check(bool ok, double deviation = 0.0) {
    ++result_.checked;
    if (!ok) ++result_.failures;
    result_.worst = std::max(result_.worst, deviation);
  }

  PropertyResult take() { return std::move(result_); }

 private:
  PropertyResult result_;
};

std::size_t pick_dim(std::mt19937_64& rng, oracle::DimRange dims) {
  return std::uniform_int_distribution<std::size_t>(dims.lo, dims.hi)(rng);
}

double random_probability(std::mt19937_64& rng) {
  // One in eight draws lands exactly on a boundary.
  const auto kind = std::uniform_int_distribution<int>(0, 15)(rng);
  if (kind == 0) return 0.0;
  if (kind == 1) return 1.0;
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

void metric_properties(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  Property nonneg("non-negativity");
  Property symmetry("symmetry");
  Property identity("identity-of-indiscernibles");
  Property bound("bound-[0,1]");
  for (std::int64_t t = 0; t < cfg.trials; ++t) {
    auto rng = oracle::trial_engine(cfg.seed, static_cast<std::uint64_t>(t), kPairs);
    const std::size_t dim = pick_dim(rng, cfg.dims);
    const auto p = oracle::random_distribution(rng, dim);
    const auto q = oracle::random_distribution(rng, dim);

    const auto report = dl_total(p, q);
    const double pq = report.dl_total;
    const double qp = dl_sum(q, p);
    const bool all_nonneg = pq >= 0.0 && std::all_of(report.per_inference.begin(), report.per_inference.end(),
                                                     [](const InferenceMeasures& m) { return m.dl >= 0.0; });
    nonneg.check(all_nonneg, std::max(0.0, -pq));
    symmetry.check(std::abs(pq - qp) <= kSymmetryTol, std::abs(pq - qp));

    const double self = dl_sum(p, p);
    const bool distinct = p != q;
    identity.check(self == 0.0 && (distinct ? pq > 0.0 : pq <= kIdentityTol), self);
    bound.check(pq <= 1.0 + kBoundSlack, std::max(0.0, pq - 1.0));
  }
  out.push_back(nonneg.take());
  out.push_back(symmetry.take());
  out.push_back(identity.take());
  out.push_back(bound.take());
}

void scaling_property(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  Property scaling("scaling");
  for (std::int64_t t = 0; t < cfg.trials; ++t) {
    auto rng = oracle::trial_engine(cfg.seed, static_cast<std::uint64_t>(t), kScaling);
    const double p = random_probability(rng);
    const double q = random_probability(rng);
    const double x = 1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng);  // (0, 1]
    const double diff = std::abs(dl_pair(x * p, x * q) - x * dl_pair(p, q));
    scaling.check(diff <= kIdentityTol, diff);
  }
  out.push_back(scaling.take());
}

void triangle_property(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  const oracle::DistanceFn distance =
      cfg.fault == Fault::kRawDlDistance ? oracle::DistanceFn(dl_sum) : oracle::DistanceFn(dlite_distance);
  Property triangle("cube-root-triangle-inequality");
  for (std::int64_t t = 0; t < cfg.trials; ++t) {
    auto rng = oracle::trial_engine(cfg.seed, static_cast<std::uint64_t>(t), kTriangle);
    const std::size_t dim = pick_dim(rng, cfg.dims);
    const auto p = oracle::random_distribution(rng, dim);
    const auto q = oracle::random_distribution(rng, dim);
    const auto r = oracle::random_distribution(rng, dim);
    const double excess = distance(p, r) - distance(p, q) - distance(q, r);
    triangle.check(excess <= kIdentityTol, excess);
  }
  out.push_back(triangle.take());
}

void composition_properties(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  Property subsystem("subsystem-weighted-sum");
  Property independent("independent-joint");
  Property marginal("conditional-marginal-change");
  Property rows("conditional-row-change");
  const oracle::DimRange small{cfg.dims.lo, std::min<std::size_t>(cfg.dims.hi, 6)};

  for (std::int64_t t = 0; t < cfg.trials; ++t) {
    const auto trial = static_cast<std::uint64_t>(t);
    {
      auto rng = oracle::trial_engine(cfg.seed, trial, kSubsystem);
      const std::size_t outer_dim = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
      auto outer = oracle::random_distribution(rng, outer_dim);
      std::vector<SubsystemSpec::InnerPair> inner;
      for (std::size_t x = 0; x < outer_dim; ++x) {
        const std::size_t dim = pick_dim(rng, small);
        inner.emplace_back(oracle::random_distribution(rng, dim), oracle::random_distribution(rng, dim));
      }
      const SubsystemSpec spec(std::move(outer), std::move(inner));
      const auto [p, q] = combine_subsystems(spec);
      const double diff = std::abs(dl_sum(p, q) - weighted_subsystem_dl(spec));
      subsystem.check(diff <= kIdentityTol, diff);
    }
    {
      auto rng = oracle::trial_engine(cfg.seed, trial, kIndependent);
      const std::size_t dx = pick_dim(rng, small);
      const std::size_t dy = pick_dim(rng, small);
      const auto px = oracle::random_distribution(rng, dx);
      const auto qx = oracle::random_distribution(rng, dx);
      const auto py = oracle::random_distribution(rng, dy);
      const double diff =
          std::abs(dl_sum(joint_independent(px, py), joint_independent(qx, py)) - dl_sum(px, qx));
      independent.check(diff <= kIdentityTol, diff);
    }
    {
      auto rng = oracle::trial_engine(cfg.seed, trial, kMarginal);
      const std::size_t dx = pick_dim(rng, small);
      const std::size_t dy = pick_dim(rng, small);
      const auto px = oracle::random_distribution(rng, dx);
      const auto qx = oracle::random_distribution(rng, dx);
      std::vector<DiscreteDistribution> cond;
      for (std::size_t x = 0; x < dx; ++x) cond.push_back(oracle::random_distribution(rng, dy));
      const auto joint_p = joint_conditional(ConditionalSpec(px, cond));
      const auto joint_q = joint_conditional(ConditionalSpec(qx, cond));
      const double diff = std::abs(dl_sum(joint_p, joint_q) - dl_sum(px, qx));
      marginal.check(diff <= kIdentityTol, diff);
    }
    {
      auto rng = oracle::trial_engine(cfg.seed, trial, kConditionalRows);
      const std::size_t dx = pick_dim(rng, small);
      const std::size_t dy = pick_dim(rng, small);
      const auto px = oracle::random_distribution(rng, dx);
      std::vector<DiscreteDistribution> cond_p;
      std::vector<DiscreteDistribution> cond_q;
      double weighted = 0.0;
      for (std::size_t x = 0; x < dx; ++x) {
        cond_p.push_back(oracle::random_distribution(rng, dy));
        cond_q.push_back(oracle::random_distribution(rng, dy));
        weighted += px[x] * dl_sum(cond_p.back(), cond_q.back());
      }
      const auto joint_p = joint_conditional(ConditionalSpec(px, cond_p));
      const auto joint_q = joint_conditional(ConditionalSpec(px, cond_q));
      const double diff = std::abs(dl_sum(joint_p, joint_q) - weighted);
      rows.check(diff <= kIdentityTol, diff);
    }
  }
  out.push_back(subsystem.take());
  out.push_back(independent.take());
  out.push_back(marginal.take());
  out.push_back(rows.take());
}

void oracle_property(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  Property agreement("quadrature-agreement");
  const std::int64_t cases = std::min(cfg.trials, kOracleCases);
  for (std::int64_t t = 0; t < cases; ++t) {
    auto rng = oracle::trial_engine(cfg.seed, static_cast<std::uint64_t>(t), kOracle);
    const double p = random_probability(rng);
    const double q = random_probability(rng);
    const double lit_diff = std::abs(lit_pair(p, q) - oracle::lit_by_integration(p, q));
    const double dh_diff = std::abs(delta_h_pair(p, q) - oracle::delta_h_by_integration(p, q));
    const double diff = std::max(lit_diff, dh_diff);
    agreement.check(diff <= kOracleTol, diff);
  }
  out.push_back(agreement.take());
}

void closed_form_property(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  Property closed("equiprobable-closed-form");
  const std::int64_t max_m = std::min<std::int64_t>(cfg.trials + 1, kClosedFormMaxM);
  double previous = 0.0;
  for (std::int64_t m = 2; m <= max_m; ++m) {
    const auto size = static_cast<std::size_t>(m);
    const double closed_value = closed_form_equiprobable(m);
    const double direct =
        dl_sum(DiscreteDistribution::equiprobable(size), DiscreteDistribution::certainty(size));
    const double diff = std::abs(closed_value - direct);
    closed.check(diff <= kClosedFormTol && closed_value > previous && closed_value < 1.0, diff);
    previous = closed_value;
  }
  out.push_back(closed.take());
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.failures == 0; });
}

VerifyReport run_verify(const VerifyConfig& cfg) {
  if (cfg.trials < 1) throw UsageError("verify needs --trials >= 1");
  if (cfg.dims.lo < 2 || cfg.dims.hi < cfg.dims.lo) throw UsageError("verify needs dims LO..HI with 2 <= LO <= HI");

  VerifyReport report;
  metric_properties(cfg, report.properties);
  scaling_property(cfg, report.properties);
  triangle_property(cfg, report.properties);
  composition_properties(cfg, report.properties);
  oracle_property(cfg, report.properties);
  closed_form_property(cfg, report.properties);
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& p : report.properties) {
    const bool ok = p.failures == 0;
    if (!ok) ++failed;
    out << (ok ? "PASS " : "FAIL ") << p.name << " checked=" << p.checked << " failures=" << p.failures
        << " worst=" << format_number(p.worst) << '\n';
  }
  if (failed == 0) {
    out << "verify: all " << report.properties.size() << " properties passed\n";
  } else {
    out << "verify: " << failed << " of " << report.properties.size() << " properties failed\n";
  }
}

}  // namespace dlite::cli
