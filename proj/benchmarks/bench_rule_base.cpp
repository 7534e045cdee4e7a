// Classify/learn cost versus rule count and feature dimension.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "egfc/rule_base.hpp"

using namespace egfc;

namespace {

std::vector<double> random_point(std::mt19937_64& rng, std::size_t dims) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> x(dims);
  for (auto& v : x) v = unif(rng);
  return x;
}

// Rule base with a forced rule count: far-apart granules, merging disabled.
RuleBase forced_rule_base(std::size_t dims, int rules, std::mt19937_64& rng) {
  HyperParams params;
  params.delta = 1e-9;
  params.h_r = kNoHorizon;
  RuleBase rb(dims, params);
  for (int i = 0; i < rules; ++i) {
    auto g = create_granule(random_point(rng, dims), i % 4 + 1);
    for (auto& m : g.memberships) m.sigma = kSigmaMin;
    rb.seed_granule(std::move(g));
  }
  return rb;
}

}  // namespace

static void BM_Classify(benchmark::State& state) {
  const auto rules = static_cast<int>(state.range(0));
  const auto dims = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(1);
  auto rb = forced_rule_base(dims, rules, rng);
  const auto x = random_point(rng, dims);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rb.classify(x));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Classify)
    ->ArgsProduct({{4, 8, 16, 32, 64}, {10, 140}});

// Samples land near an existing granule so the base absorbs instead of
// growing; the measured cost is learn_step at a stable rule count.
static void BM_LearnStep(benchmark::State& state) {
  const auto rules = static_cast<int>(state.range(0));
  const auto dims = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(2);
  auto rb = forced_rule_base(dims, rules, rng);
  std::normal_distribution<double> jitter(0.0, 0.01);
  for (auto _ : state) {
    const auto& g = rb.granules()[rng() % rb.size()];
    std::vector<double> x(dims);
    for (std::size_t j = 0; j < dims; ++j) x[j] = g.memberships[j].mu + jitter(rng);
    const auto label = g.label;
    rb.learn_step(x, label);
  }
  state.SetItemsProcessed(state.iterations());
  state.counters["rules"] = static_cast<double>(rb.size());
}
BENCHMARK(BM_LearnStep)
    ->ArgsProduct({{4, 16, 64}, {10, 140}});

BENCHMARK_MAIN();
