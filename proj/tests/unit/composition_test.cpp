#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dlite/composition.hpp"
#include "dlite/measures.hpp"
#include "dlite/oracle.hpp"

namespace dlite {
namespace {

// Direct summation: one inference moves 1/m -> 1, the other m-1 move 1/m -> 0.
double equiprobable_to_certainty(std::size_t m) {
  return dl_sum(DiscreteDistribution::equiprobable(m), DiscreteDistribution::certainty(m));
}

TEST(ClosedFormEquiprobable, MatchesDirectSummation) {
  EXPECT_NEAR(closed_form_equiprobable(2), 0.26895093981335156353, 1e-15);
  EXPECT_NEAR(closed_form_equiprobable(2), equiprobable_to_certainty(2), 1e-12);
  EXPECT_NEAR(closed_form_equiprobable(3), 0.39201359449963924382, 1e-15);
  EXPECT_NEAR(closed_form_equiprobable(3), equiprobable_to_certainty(3), 1e-12);
  for (std::size_t m : {4u, 7u, 50u, 999u}) {
    EXPECT_NEAR(closed_form_equiprobable(static_cast<std::int64_t>(m)), equiprobable_to_certainty(m), 1e-12) << m;
  }
}

TEST(ClosedFormEquiprobable, IncreasesTowardOne) {
  double previous = 0.0;
  for (std::int64_t m = 2; m <= 10000; ++m) {
    const double v = closed_form_equiprobable(m);
    ASSERT_GT(v, previous) << m;
    ASSERT_LT(v, 1.0) << m;
    previous = v;
  }
  EXPECT_LT(std::abs(closed_form_equiprobable(1'000'000) - 1.0), 1e-4);
}

TEST(ClosedFormEquiprobable, RejectsSmallM) {
  EXPECT_THROW(closed_form_equiprobable(1), DomainError);
  EXPECT_THROW(closed_form_equiprobable(0), DomainError);
  EXPECT_THROW(closed_form_equiprobable_derivative(1.5), DomainError);
}

TEST(ClosedFormDerivative, Examples) {
  EXPECT_NEAR(closed_form_equiprobable_derivative(2.0), (4.0 * std::log(2.0) + 3.0) / 36.0, 1e-16);
  EXPECT_NEAR(closed_form_equiprobable_derivative(2.0), 0.16034968672888281216, 1e-16);
  EXPECT_GT(closed_form_equiprobable_derivative(10.0), 0.0);
  EXPECT_LT(closed_form_equiprobable_derivative(10.0), closed_form_equiprobable_derivative(2.0));
  EXPECT_LT(closed_form_equiprobable_derivative(1e6), 1e-10);
  EXPECT_GT(closed_form_equiprobable_derivative(1e6), 0.0);
}

TEST(ClosedFormDerivative, MatchesCentralDifference) {
  // The closed form is defined for real m; evaluate it off the integer lattice.
  const auto value = [](double m) {
    return (1.0 / (m * (m + 1.0)) - 1.0 / m) * std::log(m) + (1.0 / m - m) / (2.0 * (m + 1.0)) +
           3.0 * (m - 1.0) / (2.0 * m);
  };
  constexpr double h = 1e-4;
  for (double m : {2.0, 2.5, 3.0, 10.0, 57.3, 1000.0}) {
    const double fd = (value(m + h) - value(m - h)) / (2.0 * h);
    EXPECT_NEAR(closed_form_equiprobable_derivative(m), fd, 1e-6) << m;
  }
  EXPECT_EQ(value(5.0), closed_form_equiprobable(5));
}

TEST(ClosedFormDerivative, DecreasesInM) {
  double previous = closed_form_equiprobable_derivative(2.0);
  for (double m = 2.5; m < 1e5; m *= 1.1) {
    const double d = closed_form_equiprobable_derivative(m);
    ASSERT_LT(d, previous) << m;
    ASSERT_GT(d, 0.0);
    previous = d;
  }
}

SubsystemSpec random_spec(std::mt19937_64& rng, std::size_t outer_dim, std::vector<std::size_t> inner_dims) {
  auto outer = oracle::random_distribution(rng, outer_dim);
  std::vector<SubsystemSpec::InnerPair> pairs;
  for (std::size_t d : inner_dims) {
    pairs.emplace_back(oracle::random_distribution(rng, d), oracle::random_distribution(rng, d));
  }
  return SubsystemSpec(std::move(outer), std::move(pairs));
}

TEST(CombineSubsystems, SingleSubsystemIsIdentity) {
  const DiscreteDistribution p{0.2, 0.8};
  const DiscreteDistribution q{0.6, 0.4};
  const SubsystemSpec spec({1.0}, {{p, q}});
  const auto [cp, cq] = combine_subsystems(spec);
  EXPECT_EQ(cp, p);
  EXPECT_EQ(cq, q);
  EXPECT_EQ(weighted_subsystem_dl(spec), dl_sum(p, q));
}

TEST(CombineSubsystems, OuterMajorOrder) {
  const SubsystemSpec spec({0.25, 0.75}, {{{0.5, 0.5}, {1.0, 0.0}}, {{0.2, 0.4, 0.4}, {0.0, 0.0, 1.0}}});
  const auto [p, q] = combine_subsystems(spec);
  ASSERT_EQ(p.dim(), 5u);
  EXPECT_DOUBLE_EQ(p[0], 0.125);
  EXPECT_DOUBLE_EQ(p[1], 0.125);
  EXPECT_DOUBLE_EQ(p[2], 0.15);
  EXPECT_DOUBLE_EQ(q[0], 0.25);
  EXPECT_DOUBLE_EQ(q[4], 0.75);
}

TEST(CombineSubsystems, UnchangedSubsystemsGiveZero) {
  const DiscreteDistribution s{0.3, 0.7};
  const SubsystemSpec spec({0.5, 0.5}, {{s, s}, {s, s}});
  const auto [p, q] = combine_subsystems(spec);
  EXPECT_EQ(dl_sum(p, q), 0.0);
  EXPECT_EQ(weighted_subsystem_dl(spec), 0.0);
}

TEST(CombineSubsystems, WeightedSumOfTwoSubsystems) {
  std::mt19937_64 rng(606);
  const auto p1 = oracle::random_distribution(rng, 3);
  const auto q1 = oracle::random_distribution(rng, 3);
  const auto p2 = oracle::random_distribution(rng, 4);
  const auto q2 = oracle::random_distribution(rng, 4);
  const SubsystemSpec spec({0.6, 0.4}, {{p1, q1}, {p2, q2}});
  const auto [p, q] = combine_subsystems(spec);
  EXPECT_NEAR(dl_sum(p, q), 0.6 * dl_sum(p1, q1) + 0.4 * dl_sum(p2, q2), 1e-12);
}

TEST(CombineSubsystems, IdentityOverRandomSpecs) {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 10000; ++i) {
    const auto spec = random_spec(rng, 3, {2, 3, 4});
    const auto [p, q] = combine_subsystems(spec);
    ASSERT_NEAR(dl_sum(p, q), weighted_subsystem_dl(spec), 1e-12);
  }
}

TEST(SubsystemSpec, Validation) {
  const DiscreteDistribution s{0.5, 0.5};
  EXPECT_THROW(SubsystemSpec({0.5, 0.5}, {{s, s}}), InvalidSpec);
  EXPECT_THROW(SubsystemSpec({1.0}, {{s, DiscreteDistribution{1.0}}}), InvalidSpec);
}

TEST(JointIndependent, Examples) {
  const DiscreteDistribution py{0.1, 0.2, 0.7};
  EXPECT_EQ(joint_independent({1.0}, py), py);
  const auto j = joint_independent({0.5, 0.5}, {0.5, 0.5});
  EXPECT_EQ(j, DiscreteDistribution({0.25, 0.25, 0.25, 0.25}));
  const auto rm = joint_independent({0.4, 0.6}, {0.1, 0.9});
  EXPECT_DOUBLE_EQ(rm[1], 0.4 * 0.9);
  EXPECT_DOUBLE_EQ(rm[2], 0.6 * 0.1);
}

TEST(JointIndependent, UnchangedFactorAddsNothing) {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 10000; ++i) {
    const auto px = oracle::random_distribution(rng, 4);
    const auto qx = oracle::random_distribution(rng, 4);
    const auto py = oracle::random_distribution(rng, 3);
    ASSERT_NEAR(dl_sum(joint_independent(px, py), joint_independent(qx, py)), dl_sum(px, qx), 1e-12);
  }
}

TEST(JointConditional, Examples) {
  const DiscreteDistribution row{0.3, 0.7};
  EXPECT_EQ(joint_conditional(ConditionalSpec({1.0}, {row})), row);
  const auto j = joint_conditional(ConditionalSpec({0.5, 0.5}, {{1.0, 0.0}, {0.2, 0.8}}));
  EXPECT_EQ(j, DiscreteDistribution({0.5, 0.0, 0.1, 0.4}));
  EXPECT_THROW(ConditionalSpec({0.5, 0.5}, {row}), InvalidSpec);
  EXPECT_THROW(ConditionalSpec({0.5, 0.5}, {row, DiscreteDistribution{1.0}}), InvalidSpec);
}

TEST(JointConditional, MarginalChangeWithFixedConditionals) {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 10000; ++i) {
    const auto px = oracle::random_distribution(rng, 3);
    const auto qx = oracle::random_distribution(rng, 3);
    std::vector<DiscreteDistribution> rows;
    for (int x = 0; x < 3; ++x) rows.push_back(oracle::random_distribution(rng, 4));
    const auto jp = joint_conditional(ConditionalSpec(px, rows));
    const auto jq = joint_conditional(ConditionalSpec(qx, rows));
    ASSERT_NEAR(dl_sum(jp, jq), dl_sum(px, qx), 1e-12);
  }
}

TEST(JointConditional, ConditionalChangeIsMarginalWeighted) {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 10000; ++i) {
    const auto px = oracle::random_distribution(rng, 3);
    std::vector<DiscreteDistribution> rows_p;
    std::vector<DiscreteDistribution> rows_q;
    double weighted = 0.0;
    for (std::size_t x = 0; x < 3; ++x) {
      rows_p.push_back(oracle::random_distribution(rng, 4));
      rows_q.push_back(oracle::random_distribution(rng, 4));
      weighted += px[x] * dl_sum(rows_p.back(), rows_q.back());
    }
    const auto jp = joint_conditional(ConditionalSpec(px, rows_p));
    const auto jq = joint_conditional(ConditionalSpec(px, rows_q));
    ASSERT_NEAR(dl_sum(jp, jq), weighted, 1e-12);
  }
}

}  // namespace
}  // namespace dlite
