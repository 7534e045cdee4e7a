// Spectrum and band-feature cost across the window lengths used in practice.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "egfc/spectral.hpp"

using namespace egfc;

static void BM_MagnitudeSpectrum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  RawWindow w{"bench", std::vector<double>(n), 128.0};
  for (auto& v : w.samples) v = unif(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(magnitude_spectrum(w));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
// 10 s, 30 s, 60 s, 300 s at 128 Hz
BENCHMARK(BM_MagnitudeSpectrum)->Arg(1280)->Arg(3840)->Arg(7680)->Arg(38400);

static void BM_BandFeatures(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  RawWindow w{"bench", std::vector<double>(n), 128.0};
  for (auto& v : w.samples) v = unif(rng);
  const auto spectrum = magnitude_spectrum(w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(band_features(spectrum, default_bands()));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_BandFeatures)->Arg(1280)->Arg(7680);

BENCHMARK_MAIN();
