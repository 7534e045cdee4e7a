// Whole-stream throughput on the 140-feature synthetic workload.
#include <benchmark/benchmark.h>

#include "egfc/eval.hpp"
#include "egfc/synthetic.hpp"

using namespace egfc;

static void BM_StreamRun(benchmark::State& state) {
  const auto dims = static_cast<std::size_t>(state.range(0));
  SyntheticSpec spec;
  spec.classes = 4;
  spec.dims = dims;
  spec.samples_per_class = 840;
  spec.dispersion = 0.03;
  spec.seed = 7;
  spec.centers.assign(4, std::vector<double>(dims));
  for (std::size_t j = 0; j < dims; ++j) {
    spec.centers[0][j] = 0.2;
    spec.centers[1][j] = 0.8;
    spec.centers[2][j] = (j % 2 == 0) ? 0.2 : 0.8;
    spec.centers[3][j] = (j % 2 == 0) ? 0.8 : 0.2;
  }
  const auto stream = generate_synthetic(spec);

  RunConfig config;
  config.collect_steps = false;
  for (auto _ : state) {
    RuleBase model(dims);
    const auto report = run_stream(model, stream, config);
    benchmark::DoNotOptimize(report.final_acc);
  }
  state.SetItemsProcessed(state.iterations() * stream.size());
}
BENCHMARK(BM_StreamRun)->Arg(10)->Arg(140)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
