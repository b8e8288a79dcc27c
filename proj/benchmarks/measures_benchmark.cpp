#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dlite/baselines.hpp"
#include "dlite/measures.hpp"
#include "dlite/oracle.hpp"

namespace {

std::vector<std::pair<dlite::DiscreteDistribution, dlite::DiscreteDistribution>> make_pairs(std::size_t dim) {
  std::mt19937_64 rng(1);
  std::vector<std::pair<dlite::DiscreteDistribution, dlite::DiscreteDistribution>> pairs;
  for (int i = 0; i < 256; ++i) {
    pairs.emplace_back(dlite::oracle::random_distribution(rng, dim), dlite::oracle::random_distribution(rng, dim));
  }
  return pairs;
}

void BM_DlPair(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> values(1024);
  for (double& v : values) v = u(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dlite::dl_pair(values[i & 1023], values[(i + 1) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_DlPair);

void BM_DlPairNearlyEqual(benchmark::State& state) {
  double q = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dlite::dl_pair(0.3, q));
    q = q == 0.3 ? 0.2999 : 0.3;
  }
}
BENCHMARK(BM_DlPairNearlyEqual);

void BM_DlSum(benchmark::State& state) {
  const auto pairs = make_pairs(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [p, q] = pairs[i++ & 255];
    benchmark::DoNotOptimize(dlite::dl_sum(p, q));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DlSum)->RangeMultiplier(4)->Range(2, 4096)->Complexity();

void BM_DlTotalReport(benchmark::State& state) {
  const auto pairs = make_pairs(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [p, q] = pairs[i++ & 255];
    benchmark::DoNotOptimize(dlite::dl_total(p, q));
  }
}
BENCHMARK(BM_DlTotalReport)->Arg(10)->Arg(1000);

void BM_JsDivergence(benchmark::State& state) {
  const auto pairs = make_pairs(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [p, q] = pairs[i++ & 255];
    benchmark::DoNotOptimize(dlite::js_divergence(p, q));
  }
}
BENCHMARK(BM_JsDivergence)->Arg(10)->Arg(1000);

void BM_LitByIntegration(benchmark::State& state) {
  const dlite::oracle::QuadratureConfig cfg{state.range(0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dlite::oracle::lit_by_integration(0.0, 0.7, cfg));
  }
}
BENCHMARK(BM_LitByIntegration)->Arg(1'000)->Arg(100'000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
